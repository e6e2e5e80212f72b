#pragma once

#include <cstddef>
#include <string_view>

namespace castel {

// closed enumeration of the rules a verdict or fixture expectation can
// rest on; lookup is by the short key stored in fixture files
enum class Rule {
    Upper,
    EasyLower,
    CastelL,
    Rckod,
    CastelGen,
    CastelP,
    Cod2,
    Mumford,
    LowerBound,
    LbSurf,
    Dimension,
    Pk,
    KP1,
    BetterB,
    ThmB,
    HardCor,
    Ceil,
    AmpleRestr,
    OneAmple,
    Properties,
    PropertiesCast,
    Uno,
    Dos,
    Alan,
    HartC,
    NewResult,
    Easy,
    Chern1,
    Kn1,
    ProdRel,
    ExTh,
    ExCor,
    MoreAdj,
    Threer1,
    Caset2,
    ExP,
    Range1,
    Range2,
    Man7,
    Hyper,
    New,
    Bilbao2,
};

struct Citation {
    std::string_view key;
    std::string_view label;
    std::string_view fragment;
};

// order matches the Rule enumeration
inline constexpr Citation kCitations[] = {
    {"upper", "Lemma (upper)", "h0(tL) <= (dt+n)/(t+n) * C(t+n,n)"},
    {"easylower", "Inequality (easylower)", "h0(tL) >= C(t+n+1,n+1) for t < d"},
    {"CastelL", "Lemma (CastelL)",
     "h0(tL) >= r*C(n+t,n+1) + C(n+t,n) - r*C(n+t-c-1,n+1) + (R-r)*C(n+t-c-1,n)"},
    {"Rckod", "Remark (Rckod)",
     "h0(tL) >= (tr+n+1)/(t+n+1)*C(t+n+1,n+1) - r*C(t+n-1,n+1)"},
    {"CastelGen", "Proposition (CastelGen)",
     "lower(t) > (delta*t+k)/(t+k)*C(t+k,k) gives a section of tL through Y"},
    {"CastelP", "Proposition (CastelP)",
     "t > n(delta-1)/(r+1) - n + 1 gives a section of tL-D"},
    {"cod2", "Remark (cod2)", "codimension 2 discriminant positive"},
    {"Mumford", "Lemma (Mumford)", "the ideal sheaf twisted by delta is spanned"},
    {"lowerbound", "Proposition (lowerbound)",
     "((delta+N-1)...(delta+n-1)/(N...(n+1)) - n)/(delta-1) <= d"},
    {"lbsurf", "Corollary (lbsurf)", "delta^3 + 11 delta^2 + 46 delta + 96 <= 60d"},
    {"Dimension", "Theorem (Dimension)",
     "dim Z >= n-k-1, equality iff Z = P^(n-k-1) and Y a complete intersection"},
    {"Pk", "Corollary (Pk)", "dim Z = n-k-1 iff (X,L) = (P^n, O(1))"},
    {"KP1", "Corollary (KP1)", "K(pi,1) with k >= 2 forces dim Z >= n-k"},
    {"BetterB", "Proposition (BetterB)",
     "if dim Z >= n-k then dim Z >= n-k + k/(n-k) - 1"},
    {"ThmB", "Theorem (ThmB)",
     "either Z = P^(n-k-1) with Y a complete intersection or dim Z >= k"},
    {"HardCor", "Corollary (HardCor)",
     "either Z = P^(n-k-1) with (X,L) = (P^n, O(1)) or dim Z >= k"},
    {"ceil", "Corollary (ceil)", "dim Z >= n/2"},
    {"AmpleRestr", "Lemma (AmpleRestr)",
     "(delta L - D) restricted to D is ample unless (X,L,O(D)) = (P^n, O(1), O(delta))"},
    {"oneAmple", "Theorem (oneAmple)",
     "delta L - D is 1-ample unless (X,L,O(D)) = (P^n, O(1), O(delta))"},
    {"Properties", "Theorem (Properties)",
     "|delta L - D| is birational; very ample if n >= r+2"},
    {"PropertiesCast", "Proposition (PropertiesCast)",
     "(delta-q+1)L - D very ample or birational outside the listed cases"},
    {"Uno", "Relation (Uno)", "r >= q-1"},
    {"Dos", "Relation (Dos)", "d >= r+1 and delta >= q+1"},
    {"Alan", "Theorem (Alan)",
     "dim Z = n-k with k >= 2 forces X a hypersurface in P^(n+1)"},
    {"HartC", "Proposition (HartC)",
     "dim Z >= (n-k) + k/3 - 1 when X is not a complete intersection"},
    {"newResult", "Theorem (newResult)",
     "dim Z < n iff Y a section of the scroll or (X,L) = (P^(n-1) x P^1, O(1,1))"},
    {"Easy", "Theorem (Easy)", "K_X + (n-1)L is spanned outside cases 1, 2, 3"},
    {"Chern1", "Corollary (Chern1)", "c1(N) <= n-2-k"},
    {"kn1", "Proposition (kn1)", "s >= -1; d = ((s+1)^n - 1)/s, d = n at s = 0"},
    {"prodRel", "Relation (prodRel)", "t*h = (s+1)^(n-1)"},
    {"ExTh", "Proposition (ExTh)",
     "fiber degree 1 forces X = P(O(s+1) + O(1)) over P^(n-1)"},
    {"ExCor", "Corollary (ExCor)", "s = 0 forces (X,L) = (P^(n-1) x P^1, O(1,1))"},
    {"MoreAdj", "Theorem (MoreAdj)",
     "the first reduction exists and is an isomorphism unless it contracts exactly P"},
    {"threer1", "Theorem (threer1)",
     "s = 1 with fiber degree >= 2 forces t = 4, the blowup at a point of the"
     " intersection of three quadrics in P^6"},
    {"caset2", "Theorem (caset2)", "s >= 2 rules out fiber degree 2"},
    {"ExP", "Example (ExP)", "on P^2 x P^2: delta = L^3.D = 6, section of tL-D iff t >= 2"},
    {"Range1", "Example (Range1)", "d = n, delta = n+1, h0(L) = 2n, q = r+1"},
    {"Range2", "Example (Range2)", "d = n+1, delta = n+2, h0(L) = 2n+1, q = r+1"},
    {"Man7", "Example (Man7)", "base degree h = H^(n-1) = 1"},
    {"Hyper", "Example (Hyper)",
     "a degree d hypersurface in P^(2k+1) through a linear P^k projects onto P^k"},
    {"New", "Example (New)", "delta = 1 section of a bundle with lower dimensional image"},
    {"Bilbao2", "Example (Bilbao2)", "dim Z = n-k+s-1"},
};

inline const Citation& cite(Rule r) { return kCitations[static_cast<std::size_t>(r)]; }

inline const Citation* find_citation(std::string_view key) {
    for (const auto& c : kCitations)
        if (c.key == key) return &c;
    return nullptr;
}

inline Rule rule_of(const Citation& c) {
    return static_cast<Rule>(&c - kCitations);
}

}  // namespace castel
