#include <stdio.h>
#include <string.h>
#include "lrq.h"

int main(void) {
    LrqGraphSum *l = NULL, *p = NULL;
    char *text = NULL;
    size_t dim = 0;

    if (lrq_graph_sum_parse("(|o|)", &l) != LRQ_STATUS_OK) return 1;
    if (lrq_graph_sum_product(l, l, LRQ_ALGEBRA_FULL, &p) != LRQ_STATUS_OK) return 1;
    lrq_graph_sum_to_string(p, &text);
    printf("%s\n", text);
    int ok = strcmp(text, "(|o(|o|)) + ((|o|)o|)") == 0;
    lrq_string_free(text);

    lrq_cohomology_dim(2, 1, LRQ_SPACE_TOP_REC, &dim);
    printf("%zu\n", dim);
    ok = ok && dim == 1;

    if (lrq_graph_sum_parse("(|v|", &p) == LRQ_STATUS_PARSE_ERROR)
        printf("%s\n", lrq_last_error_message());

    lrq_graph_sum_free(p);
    lrq_graph_sum_free(l);
    return ok ? 0 : 1;
}
