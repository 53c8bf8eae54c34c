#include <stdio.h>
#include <string.h>
#include "wreathgen.h"

int main(void) {
    WgPermutation *p = NULL, *q = NULL, *r = NULL;
    if (wg_perm_parse("(1,2,3,4)", 5, &p) != WG_STATUS_OK) return 1;
    if (wg_perm_parse("(1,2)(3,4,5)", 5, &q) != WG_STATUS_OK) return 1;
    if (wg_perm_compose(p, q, &r) != WG_STATUS_OK) return 1;
    char buf[64];
    size_t needed = 0;
    if (wg_perm_to_string(r, buf, sizeof buf, &needed) != WG_STATUS_OK) return 1;
    printf("%s\n", buf);

    WgGeneratingSet *set = NULL;
    if (wg_gens_new("S:3", "S:3", &set) != WG_STATUS_OK) return 1;
    bool ok = false;
    if (wg_gens_verify(set, &ok) != WG_STATUS_OK || !ok) return 1;

    bool matches = true;
    if (wg_verify_lemma("L2.5-1", 5, &matches) != WG_STATUS_EXCLUDED) return 1;
    printf("%s\n", wg_last_error());

    wg_gens_free(set);
    wg_perm_free(p);
    wg_perm_free(q);
    wg_perm_free(r);
    return 0;
}
