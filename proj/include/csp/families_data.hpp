#ifndef CSP_FAMILIES_DATA_HPP
#define CSP_FAMILIES_DATA_HPP

// Canonical transcription of the classification tables for degrees 2-7.
// This is the single source for the family catalog; everything else derives
// from it. Coefficients are listed in ascending order c_0 .. c_{n-1} in the
// compact expression syntax of ParamPoly. The positivity column uses
//   "always"      positive for every parameter value
//   "never"       positive for no parameter value
//   "<var><=k" /
//   "<var>>=k"    exact threshold conditions
//   "computed"    no closed condition is carried; decided per instance
//                 by the exact real-root count

namespace csp::families_data {

struct FamilyRow {
    const char* id;
    int degree;
    const char* params;      // subset of "abq"
    const char* coeffs[7];   // c_0 .. c_{degree-1}, unused slots null
    const char* positivity;
    const char* solver;      // "lin" or "sumdiv" (see classify)
};

inline constexpr FamilyRow kRows[] = {
    // degree 2: two isolated polynomials
    {"deg2/1", 2, "", {"1", "-1"}, "always", "lin"},
    {"deg2/2", 2, "", {"1", "-3"}, "always", "lin"},

    // degree 3: one family per sign of f(1)
    {"deg3/1", 3, "a", {"-1", "-a+1", "a"}, "a<=1", "lin"},
    {"deg3/2", 3, "a", {"-1", "-a-1", "a"}, "a<=0", "lin"},

    // degree 4
    {"deg4/1", 4, "a", {"1", "a-1", "-2a", "a"}, "a<=0", "lin"},
    {"deg4/2", 4, "a", {"1", "a-1", "-2a-2", "a"}, "a<=0", "lin"},
    {"deg4/3", 4, "a", {"1", "a+1", "-2a-2", "a"}, "a<=-1", "lin"},
    {"deg4/4", 4, "a", {"1", "a+1", "-2a-4", "a"}, "a<=-1", "lin"},

    // degree 5, twelve cases
    {"deg5/I-i-1", 5, "a", {"-1", "-a+1", "2a+1", "-2a-1", "a"}, "a<=0", "lin"},
    {"deg5/I-i-2", 5, "a", {"-1", "-2a+2", "5a", "-5a-1", "2a"}, "a<=0", "lin"},
    {"deg5/I-i-3", 5, "a", {"-1", "-a-1", "4a+15", "-4a-13", "a"}, "a<=-3", "lin"},
    {"deg5/I-i-4", 5, "a", {"-1", "-2a-2", "7a+13", "-7a-10", "2a"}, "a<=-2", "lin"},
    {"deg5/I-ii-1", 5, "ab", {"-1", "-a", "-b+1", "b", "a"}, "computed", "lin"},
    {"deg5/I-ii-2", 5, "ab", {"-1", "-ab+a+5", "3ab-2a-b-9", "-3ab+a+b+10", "ab-5"}, "computed", "sumdiv"},
    {"deg5/II-i-1", 5, "a", {"-1", "-a+1", "4a+9", "-4a-11", "a"}, "a<=-2", "lin"},
    {"deg5/II-i-2", 5, "a", {"-1", "-2a+2", "7a+3", "-7a-6", "2a"}, "a<=-1", "lin"},
    {"deg5/II-i-3", 5, "a", {"-1", "-a-1", "2a+3", "-2a-3", "a"}, "a<=-1", "lin"},
    {"deg5/II-i-4", 5, "a", {"-1", "-2a-2", "5a+6", "-5a-5", "2a"}, "a<=-1", "lin"},
    {"deg5/II-ii-1", 5, "ab", {"-1", "-a", "-b-1", "b", "a"}, "computed", "lin"},
    {"deg5/II-ii-2", 5, "ab", {"-1", "-ab+a+5", "3ab-2a+b-11", "-3ab+a-b+10", "ab-5"}, "computed", "sumdiv"},

    // degree 6: the four one-parameter families indexed by q = c_5 - c_1
    {"deg6/hol-1", 6, "q", {"1", "-3q-9", "2q^2+15q+30", "-3q^2-22q-42", "q^2+12q+29", "-2q-9"}, "q>=-4", "lin"},
    {"deg6/hol-2", 6, "q", {"1", "-2q-3", "q^2+4q+5", "-q^2-4q-6", "3q+4", "-q-3"}, "q>=-2", "lin"},
    {"deg6/hol-3", 6, "q", {"1", "2q-9", "q^2-12q+29", "-3q^2+22q-42", "2q^2-15q+30", "3q-9"}, "q<=4", "lin"},
    {"deg6/hol-4", 6, "q", {"1", "q-3", "-3q+4", "-q^2+4q-6", "q^2-4q+5", "2q-3"}, "q<=2", "lin"},

    // degree 7, under the constraint c_1 + c_6 = c_2 + c_5 = 0
    {"deg7/1", 7, "a", {"-1", "-1", "a", "a+1", "-a", "-a", "1"}, "a<=5", "lin"},
    {"deg7/2", 7, "a", {"-1", "-1", "a", "a", "-a+1", "-a", "1"}, "never", "lin"},
    {"deg7/3", 7, "a", {"-1", "-1", "a", "a-1", "-a", "-a", "1"}, "never", "lin"},
    {"deg7/4", 7, "a", {"-1", "-1", "a", "a", "-a-1", "-a", "1"}, "a<=5", "lin"},
    {"deg7/5", 7, "a", {"-1", "a", "-a+2", "a^2+3", "-a^2-2", "a-2", "-a"}, "a>=-2", "lin"},
    {"deg7/6", 7, "a", {"-1", "a", "-a+2", "a^2+2", "-a^2-1", "a-2", "-a"}, "a>=0", "lin"},
    {"deg7/7", 7, "a", {"-1", "a", "-a+2", "a^2+1", "-a^2-2", "a-2", "-a"}, "a>=0", "lin"},
    {"deg7/8", 7, "a", {"-1", "a", "-a+2", "a^2+2", "-a^2-3", "a-2", "-a"}, "a>=-2", "lin"},
};

}  // namespace csp::families_data

#endif
