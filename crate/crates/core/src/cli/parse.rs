//! Recursive-descent parsers for the text forms printed by `Display`.
//!
//! ```text
//! sum    := "0" | term (("+" | "-") term)*
//! term   := ["-"] [rational "*"] basis
//! graph  := "|" | "(" graph ("v" | "o") graph ")"
//! perm   := "[" [uint ("," uint)*] "]"
//! word   := "1" | ("L" | "T")+
//! tensor := basis "@" basis
//! ```
//! Whitespace is ignored everywhere; error offsets are byte offsets.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::freemodule::{LinComb, Pair, Rational};
use crate::loopgraphs::LoopGraph;
use crate::permutations::Permutation;
use crate::subalgebras::{Letter, Word};
use crate::trees::PlanarBinaryTree;

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
#[error("syntax error at offset {offset}: {message}")]
pub struct ParseError {
    pub offset: usize,
    pub message: String,
}

pub type ParseResult<T> = std::result::Result<T, ParseError>;

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl<'a> Parser<'a> {
    fn new(s: &'a str) -> Self {
        Parser {
            src: s.as_bytes(),
            pos: 0,
        }
    }

    fn error<T>(&self, message: impl Into<String>) -> ParseResult<T> {
        Err(ParseError {
            offset: self.pos,
            message: message.into(),
        })
    }

    fn skip_ws(&mut self) {
        while self.src.get(self.pos).is_some_and(u8::is_ascii_whitespace) {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn eat(&mut self, c: u8) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: u8) -> ParseResult<()> {
        if self.eat(c) {
            Ok(())
        } else {
            self.unexpected(&format!("'{}'", c as char))
        }
    }

    fn unexpected<T>(&mut self, wanted: &str) -> ParseResult<T> {
        match self.peek() {
            Some(c) => self.error(format!("expected {wanted}, found '{}'", c as char)),
            None => self.error(format!("expected {wanted}, found end of input")),
        }
    }

    fn finish(&mut self) -> ParseResult<()> {
        if self.peek().is_some() {
            return self.unexpected("end of input");
        }
        Ok(())
    }

    fn uint(&mut self) -> ParseResult<BigInt> {
        self.skip_ws();
        let start = self.pos;
        while self.src.get(self.pos).is_some_and(u8::is_ascii_digit) {
            self.pos += 1;
        }
        if start == self.pos {
            return self.unexpected("a digit");
        }
        let digits = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii digits");
        Ok(digits.parse().expect("digits parse as an integer"))
    }

    /// `uint ["/" uint] "*"`, or `None` (with nothing consumed) if the input
    /// here is not a coefficient.
    fn coefficient(&mut self) -> ParseResult<Option<Rational>> {
        if !self.peek().is_some_and(|c| c.is_ascii_digit()) {
            return Ok(None);
        }
        let start = self.pos;
        let num = self.uint()?;
        let den = if self.eat(b'/') {
            let at = self.pos;
            let d = self.uint()?;
            if d.is_zero() {
                self.pos = at;
                return self.error("zero denominator");
            }
            d
        } else {
            BigInt::one()
        };
        if !self.eat(b'*') {
            self.pos = start;
            return Ok(None);
        }
        Ok(Some(Rational::new(num, den)))
    }

    fn graph(&mut self) -> ParseResult<LoopGraph> {
        match self.peek() {
            Some(b'|') => {
                self.pos += 1;
                Ok(LoopGraph::Leaf)
            }
            Some(b'(') => {
                self.pos += 1;
                let left = self.graph()?;
                let looped = match self.peek() {
                    Some(b'v') => false,
                    Some(b'o') => true,
                    _ => return self.unexpected("'v' or 'o'"),
                };
                self.pos += 1;
                let right = self.graph()?;
                self.expect(b')')?;
                Ok(LoopGraph::Node {
                    left: Box::new(left),
                    looped,
                    right: Box::new(right),
                })
            }
            _ => self.unexpected("'|' or '('"),
        }
    }

    fn tree(&mut self) -> ParseResult<PlanarBinaryTree> {
        match self.peek() {
            Some(b'|') => {
                self.pos += 1;
                Ok(PlanarBinaryTree::Leaf)
            }
            Some(b'(') => {
                self.pos += 1;
                let left = self.tree()?;
                self.expect(b'v')?;
                let right = self.tree()?;
                self.expect(b')')?;
                Ok(PlanarBinaryTree::Node(Box::new(left), Box::new(right)))
            }
            _ => self.unexpected("'|' or '('"),
        }
    }

    fn perm(&mut self) -> ParseResult<Permutation> {
        let start = {
            self.skip_ws();
            self.pos
        };
        self.expect(b'[')?;
        let mut word = Vec::new();
        if !self.eat(b']') {
            loop {
                let at = self.pos;
                let v = self.uint()?;
                match usize::try_from(v) {
                    Ok(v) => word.push(v),
                    Err(_) => {
                        self.pos = at;
                        return self.error("entry too large");
                    }
                }
                if self.eat(b']') {
                    break;
                }
                self.expect(b',')?;
            }
        }
        Permutation::new(word).or_else(|e| {
            self.pos = start;
            self.error(e.to_string())
        })
    }

    fn word(&mut self) -> ParseResult<Word> {
        if self.eat(b'1') {
            return Ok(Word(Vec::new()));
        }
        let mut letters = Vec::new();
        loop {
            match self.peek() {
                Some(b'L') => letters.push(Letter::L),
                Some(b'T') => letters.push(Letter::T),
                _ => break,
            }
            self.pos += 1;
        }
        if letters.is_empty() {
            return self.unexpected("'L', 'T' or '1'");
        }
        Ok(Word(letters))
    }

    fn sum<B, F>(&mut self, mut basis: F) -> ParseResult<LinComb<B>>
    where
        B: Ord + Clone,
        F: FnMut(&mut Self) -> ParseResult<B>,
    {
        let mut out = LinComb::zero();
        let save = self.pos;
        if self.eat(b'0') {
            if self.peek().is_none() {
                return Ok(out);
            }
            self.pos = save;
        }
        let mut sign = Rational::one();
        loop {
            if self.eat(b'-') {
                sign = -sign;
            }
            let c = self.coefficient()?.unwrap_or_else(Rational::one);
            let b = basis(self)?;
            out.add_term(sign * c, b);
            sign = match self.peek() {
                Some(b'+') => Rational::one(),
                Some(b'-') => -Rational::one(),
                _ => break,
            };
            self.pos += 1;
        }
        self.finish()?;
        Ok(out)
    }
}

fn whole<T>(s: &str, f: impl FnOnce(&mut Parser) -> ParseResult<T>) -> ParseResult<T> {
    let mut p = Parser::new(s);
    let v = f(&mut p)?;
    p.finish()?;
    Ok(v)
}

fn pair<B>(f: impl Fn(&mut Parser) -> ParseResult<B>) -> impl Fn(&mut Parser) -> ParseResult<Pair<B, B>> {
    move |p| {
        let a = f(p)?;
        p.expect(b'@')?;
        Ok(Pair(a, f(p)?))
    }
}

pub fn parse_graph(s: &str) -> ParseResult<LoopGraph> {
    whole(s, |p| p.graph())
}

pub fn parse_tree(s: &str) -> ParseResult<PlanarBinaryTree> {
    whole(s, |p| p.tree())
}

pub fn parse_permutation(s: &str) -> ParseResult<Permutation> {
    whole(s, |p| p.perm())
}

pub fn parse_word(s: &str) -> ParseResult<Word> {
    whole(s, |p| p.word())
}

pub fn parse_graph_sum(s: &str) -> ParseResult<LinComb<LoopGraph>> {
    Parser::new(s).sum(Parser::graph)
}

pub fn parse_tree_sum(s: &str) -> ParseResult<LinComb<PlanarBinaryTree>> {
    Parser::new(s).sum(Parser::tree)
}

pub fn parse_perm_sum(s: &str) -> ParseResult<LinComb<Permutation>> {
    Parser::new(s).sum(Parser::perm)
}

pub fn parse_word_sum(s: &str) -> ParseResult<LinComb<Word>> {
    Parser::new(s).sum(Parser::word)
}

pub fn parse_graph_tensor(s: &str) -> ParseResult<LinComb<Pair<LoopGraph, LoopGraph>>> {
    Parser::new(s).sum(pair(|p: &mut Parser| p.graph()))
}

/// Which grammar [`parse`] applies.
#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Kind {
    Graph,
    Tree,
    Tensor,
    Word,
    Permutation,
}

/// A parsed sum, tagged by kind.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Expression {
    Graphs(LinComb<LoopGraph>),
    Trees(LinComb<PlanarBinaryTree>),
    Tensors(LinComb<Pair<LoopGraph, LoopGraph>>),
    Words(LinComb<Word>),
    Permutations(LinComb<Permutation>),
}

pub fn parse(s: &str, kind: Kind) -> ParseResult<Expression> {
    Ok(match kind {
        Kind::Graph => Expression::Graphs(parse_graph_sum(s)?),
        Kind::Tree => Expression::Trees(parse_tree_sum(s)?),
        Kind::Tensor => Expression::Tensors(parse_graph_tensor(s)?),
        Kind::Word => Expression::Words(parse_word_sum(s)?),
        Kind::Permutation => Expression::Permutations(parse_perm_sum(s)?),
    })
}

impl fmt::Display for Expression {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Expression::Graphs(x) => x.fmt(f),
            Expression::Trees(x) => x.fmt(f),
            Expression::Tensors(x) => x.fmt(f),
            Expression::Words(x) => x.fmt(f),
            Expression::Permutations(x) => x.fmt(f),
        }
    }
}
