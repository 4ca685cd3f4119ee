/* Plain-C consumer of the shared library: the header must compile as C and
 * the documented call patterns must work without any C++ runtime help. */

#include <stdio.h>
#include <string.h>

#include "eudoxus/eudoxus.h"

static int fail(const char* what) {
    fprintf(stderr, "capi_smoke: %s: %s\n", what, eud_last_error());
    return 1;
}

int main(void) {
    eud_real* x = NULL;
    eud_real* y = NULL;
    eud_real* sum = NULL;
    char* text = NULL;
    int rc = 0;

    if (eud_real_from_expr("sqrt(2)", 64, &x) != EUD_OK)
        return fail("from_expr");

    if (eud_real_colonnade(x, 6, 64, &text) != EUD_OK) return fail("colonnade");
    rc = strcmp(text, "1\n2\n4\n5\n7\n8\n");
    eud_string_free(text);
    text = NULL;
    if (rc != 0) return fail("colonnade mismatch");

    if (eud_real_from_ratio("-3", "2", &y) != EUD_OK) return fail("from_ratio");
    if (eud_real_add(x, y, &sum) != EUD_OK) return fail("add");
    if (eud_real_digits(sum, 8, 64, &text) != EUD_OK) return fail("digits");
    /* sqrt(2) - 3/2 = -0.0857864376... */
    rc = strncmp(text, "-0.0857864", 10);
    eud_string_free(text);
    text = NULL;
    if (rc != 0) return fail("digits mismatch");

    {
        eud_real* bad = NULL;
        if (eud_real_from_expr("(1 +", 64, &bad) != EUD_PARSE_ERROR)
            return fail("expected parse error");
        if (strlen(eud_last_error()) == 0) return fail("empty error message");
    }

    eud_real_release(sum);
    eud_real_release(y);
    eud_real_release(x);
    puts("capi_smoke: ok");
    return 0;
}
