//! Command-line front end. [`run`] is the whole program minus process I/O so
//! that tests can drive it directly.

mod parse;

use std::fmt::{Display, Write as _};

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

pub use parse::{
    parse, parse_graph, parse_graph_sum, parse_graph_tensor, parse_perm_sum, parse_permutation, parse_tree,
    parse_tree_sum, parse_word, parse_word_sum, Expression, Kind, ParseError, ParseResult,
};

use crate::airy::airy_correlator;
use crate::complexes::{border, cohomology_dim, d_h, d_h_reg, leibniz_probe, Space};
use crate::error::Error;
use crate::freemodule::{fmt_rational, LinComb};
use crate::hopfops::{antipode, check_axiom, counit, delta_h_sum, star_h_sums, star_trees, Axiom, GraphSum, TreeSum};
use crate::loopgraphs::{contract, enumerate_graphs, signature};
use crate::permutations::{coproduct_perm_sum, star_perm_sums};
use crate::subalgebras::{enumerate_words, full_correlator, generating_function, psi_word, star_reg};
use crate::trees::{degeneracy, enumerate_trees, extra_degeneracy, face, perm_to_tree};

#[derive(Parser, Debug)]
#[command(name = "lrq", version, about = "Quantized Loday-Ronco Hopf algebra calculator")]
struct Cli {
    /// Emit JSON instead of the text grammar.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Algebra {
    Full,
    Reg,
    Classical,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum DhSpace {
    Full,
    Reg,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum CohomologySpace {
    Full,
    Reg,
    Toprec,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum AxiomArg {
    Assoc,
    Coassoc,
    Compat,
    Counit,
    Antipode,
}

#[derive(Subcommand, Debug)]
enum EnumerateWhat {
    /// Planar binary trees of a given order.
    Trees {
        #[arg(long)]
        order: usize,
    },
    /// Loop graphs of a given order and genus.
    Graphs {
        #[arg(long)]
        order: usize,
        #[arg(long)]
        genus: usize,
        #[arg(long)]
        regular: bool,
    },
    /// Words in T and L without adjacent L letters.
    Words {
        #[arg(long)]
        order: usize,
        #[arg(long)]
        genus: usize,
    },
}

#[derive(Subcommand, Debug)]
enum Command {
    /// List basis elements.
    #[command(subcommand)]
    Enumerate(EnumerateWhat),
    /// Product of two graph sums.
    Product {
        x: String,
        y: String,
        #[arg(long, value_enum, default_value = "full")]
        algebra: Algebra,
    },
    /// The coproduct of a graph sum.
    Coproduct {
        x: String,
    },
    Antipode {
        x: String,
    },
    Counit {
        x: String,
    },
    /// Shuffle product of two permutation sums.
    PermProduct {
        x: String,
        y: String,
    },
    PermCoproduct {
        x: String,
    },
    /// The planar binary tree of a permutation.
    TreeOfPerm {
        sigma: String,
    },
    Face {
        #[arg(long)]
        index: usize,
        tree: String,
    },
    Degeneracy {
        #[arg(long)]
        index: usize,
        tree: String,
    },
    ExtraDegeneracy {
        tree: String,
    },
    /// Alternating sum of faces on a tree sum.
    Border {
        x: String,
    },
    /// The quantum differential.
    Dh {
        x: String,
        #[arg(long, value_enum, default_value = "full")]
        space: DhSpace,
    },
    Cohomology {
        #[arg(long)]
        order: usize,
        #[arg(long)]
        genus: usize,
        #[arg(long, value_enum, default_value = "toprec")]
        space: CohomologySpace,
    },
    /// Graph sum represented by a word in T and L.
    Psi {
        word: String,
    },
    /// Sum of all regular word images of a given order, by genus.
    Correlator {
        #[arg(long)]
        order: usize,
    },
    /// Coefficients of exp(a1 T + a2 L) in the word algebra.
    Genfun {
        #[arg(long, default_value_t = 3)]
        max_degree: usize,
    },
    /// W^g_k on the Airy curve.
    Airy {
        #[arg(long)]
        genus: u32,
        #[arg(long)]
        legs: u32,
    },
    Axioms {
        #[arg(long, value_enum)]
        axiom: AxiomArg,
        #[arg(long, default_value_t = 4)]
        max_order: usize,
    },
    /// Parse an expression and print its canonical form.
    ParseCheck {
        #[arg(long, value_enum, default_value = "graph")]
        kind: Kind,
        x: String,
    },
    /// Genus, legs and Euler characteristic of a regular graph.
    Signature {
        graph: String,
    },
    /// Merge the loops at slots i and i+1.
    Contract {
        #[arg(long)]
        index: usize,
        graph: String,
    },
    /// Which sign makes d_h a derivation on the given pair.
    Leibniz {
        x: String,
        y: String,
    },
}

/// Exit status and captured output of one invocation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Output {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

enum Failure {
    Parse(ParseError),
    Domain(String),
}

impl From<ParseError> for Failure {
    fn from(e: ParseError) -> Self {
        Failure::Parse(e)
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Domain(e.to_string())
    }
}

/// Text and JSON renderings of one result.
struct Rendered {
    text: String,
    json: Value,
}

impl Rendered {
    fn scalar(x: impl Display) -> Self {
        let text = x.to_string();
        Rendered {
            json: Value::String(text.clone()),
            text,
        }
    }

    fn list<T: Display>(items: &[T]) -> Self {
        let strings: Vec<String> = items.iter().map(ToString::to_string).collect();
        Rendered {
            text: strings.join("\n"),
            json: json!(strings),
        }
    }
}

fn sum_json<B: Ord + Clone + Display>(x: &LinComb<B>) -> Value {
    let terms: Vec<Value> = x
        .iter()
        .map(|(b, c)| json!({"basis": b.to_string(), "coefficient": fmt_rational(c)}))
        .collect();
    json!({ "terms": terms })
}

fn sum<B: Ord + Clone + Display>(x: &LinComb<B>) -> Rendered {
    Rendered {
        text: x.to_string(),
        json: sum_json(x),
    }
}

fn genus_zero(x: &GraphSum) -> Result<TreeSum, Failure> {
    if x.support().any(|t| t.genus() > 0) {
        return Err(Failure::Domain(format!("classical product needs trees, got {x}")));
    }
    Ok(x.map_basis(|t| t.underlying_tree()))
}

fn dispatch(command: Command) -> Result<Rendered, Failure> {
    Ok(match command {
        Command::Enumerate(EnumerateWhat::Trees { order }) => Rendered::list(&enumerate_trees(order)),
        Command::Enumerate(EnumerateWhat::Graphs { order, genus, regular }) => {
            Rendered::list(&enumerate_graphs(order, genus, regular))
        }
        Command::Enumerate(EnumerateWhat::Words { order, genus }) => Rendered::list(&enumerate_words(order, genus)),
        Command::Product { x, y, algebra } => {
            let (x, y) = (parse_graph_sum(&x)?, parse_graph_sum(&y)?);
            match algebra {
                Algebra::Full => sum(&star_h_sums(&x, &y)),
                Algebra::Reg => sum(&star_reg(&x, &y)),
                Algebra::Classical => sum(&star_trees(&genus_zero(&x)?, &genus_zero(&y)?)),
            }
        }
        Command::Coproduct { x } => sum(&delta_h_sum(&parse_graph_sum(&x)?)),
        Command::Antipode { x } => sum(&antipode(&parse_graph_sum(&x)?)),
        Command::Counit { x } => Rendered::scalar(fmt_rational(&counit(&parse_graph_sum(&x)?))),
        Command::PermProduct { x, y } => sum(&star_perm_sums(&parse_perm_sum(&x)?, &parse_perm_sum(&y)?)),
        Command::PermCoproduct { x } => sum(&coproduct_perm_sum(&parse_perm_sum(&x)?)),
        Command::TreeOfPerm { sigma } => Rendered::scalar(perm_to_tree(&parse_permutation(&sigma)?)),
        Command::Face { index, tree } => Rendered::scalar(face(index, &parse_tree(&tree)?)?),
        Command::Degeneracy { index, tree } => Rendered::scalar(degeneracy(index, &parse_tree(&tree)?)?),
        Command::ExtraDegeneracy { tree } => Rendered::scalar(extra_degeneracy(&parse_tree(&tree)?)),
        Command::Border { x } => sum(&border(&parse_tree_sum(&x)?)?),
        Command::Dh { x, space } => {
            let x = parse_graph_sum(&x)?;
            match space {
                DhSpace::Full => sum(&d_h(&x)),
                DhSpace::Reg => sum(&d_h_reg(&x)),
            }
        }
        Command::Cohomology { order, genus, space } => {
            let space = match space {
                CohomologySpace::Full => Space::Full,
                CohomologySpace::Reg => Space::Reg,
                CohomologySpace::Toprec => Space::TopRec,
            };
            let dim = cohomology_dim(order, genus, space);
            Rendered {
                text: dim.to_string(),
                json: json!(dim),
            }
        }
        Command::Psi { word } => sum(&psi_word(&parse_word(&word)?)?),
        Command::Correlator { order } => {
            let table = full_correlator(order);
            let mut text = String::new();
            let mut rows = serde_json::Map::new();
            for (g, x) in &table {
                let _ = writeln!(text, "h^{g}: {x}");
                rows.insert(g.to_string(), sum_json(x));
            }
            Rendered {
                text: text.trim_end().to_string(),
                json: Value::Object(rows),
            }
        }
        Command::Genfun { max_degree } => {
            let table = generating_function(max_degree);
            let mut text = String::new();
            let mut rows = Vec::new();
            for ((i, j), x) in &table {
                let _ = writeln!(text, "a1^{i} a2^{j}: {x}");
                rows.push(json!({"i": i, "j": j, "value": sum_json(x)}));
            }
            Rendered {
                text: text.trim_end().to_string(),
                json: json!(rows),
            }
        }
        Command::Airy { genus, legs } => {
            let w = airy_correlator(genus, legs)?;
            Rendered {
                text: w.to_string(),
                json: w.to_json(),
            }
        }
        Command::Axioms { axiom, max_order } => {
            let axiom = match axiom {
                AxiomArg::Assoc => Axiom::Assoc,
                AxiomArg::Coassoc => Axiom::Coassoc,
                AxiomArg::Compat => Axiom::Compat,
                AxiomArg::Counit => Axiom::Counit,
                AxiomArg::Antipode => Axiom::Antipode,
            };
            let outcome = check_axiom(axiom, max_order);
            Rendered {
                text: outcome.to_string(),
                json: json!({"passed": outcome.passed(), "detail": outcome.to_string()}),
            }
        }
        Command::ParseCheck { kind, x } => Rendered::scalar(parse(&x, kind)?),
        Command::Signature { graph } => {
            let s = signature(&parse_graph(&graph)?)?;
            Rendered {
                text: format!("genus {} legs {} euler {}", s.genus, s.legs, s.euler),
                json: json!({"genus": s.genus, "legs": s.legs, "euler": s.euler}),
            }
        }
        Command::Contract { index, graph } => match contract(index, &parse_graph(&graph)?) {
            Some(t) => Rendered::scalar(t),
            None => Rendered::scalar("0"),
        },
        Command::Leibniz { x, y } => {
            let r = leibniz_probe(&parse_graph_sum(&x)?, &parse_graph_sum(&y)?)?;
            let signs: Vec<&str> = [(r.plus_holds, "+1"), (r.minus_holds, "-1")]
                .into_iter()
                .filter_map(|(ok, s)| ok.then_some(s))
                .collect();
            Rendered {
                text: if signs.is_empty() {
                    "none".into()
                } else {
                    signs.join(" ")
                },
                json: json!({"plus": r.plus_holds, "minus": r.minus_holds}),
            }
        }
    })
}

/// Runs the program on `argv` (including the program name).
pub fn run<I, S>(argv: I) -> Output
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                Output {
                    code: 1,
                    stdout: String::new(),
                    stderr: text,
                }
            } else {
                Output {
                    code: 0,
                    stdout: text,
                    stderr: String::new(),
                }
            };
        }
    };
    match dispatch(cli.command) {
        Ok(r) => Output {
            code: 0,
            stdout: if cli.json {
                format!("{}\n", r.json)
            } else {
                format!("{}\n", r.text)
            },
            stderr: String::new(),
        },
        Err(Failure::Parse(e)) => Output {
            code: 1,
            stdout: String::new(),
            stderr: format!("{e}\n"),
        },
        Err(Failure::Domain(message)) => Output {
            code: 2,
            stdout: String::new(),
            stderr: format!("error: {message}\n"),
        },
    }
}
