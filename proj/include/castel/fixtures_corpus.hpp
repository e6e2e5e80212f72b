#pragma once

// embedded copy of data/fixtures.txt; the suite checks the two stay
// byte-identical

namespace castel {

inline constexpr const char kFixtureCorpus[] = R"FIX(# Worked-example corpus. Every record is re-derived from scratch by the
# verify subcommand; expected values carry the citation key they come from.
#
# Grammar, one directive per line, '#' starts a comment:
#   fixture <name>           open a record
#   note <free text>         description, echoed in reports
#   space <p1> <p2> ...      ambient product P^p1 x P^p2 x ...
#   bundle <name> <a1> ...   named line bundle class O(a1,...)
#   segre expect <v> cite <key>
#   h0 <term> ... expect <v> cite <key>
#       term: [+|-][mult]<bundle>, e.g. 2L or -D
#   intersect <bundle>[^pow] ... expect <v> cite <key>
#   section-iff <A> <B> threshold <t0> tmax <T> cite <key>
#       h0(t*A - B) > 0 iff t >= t0, checked for 1 <= t <= T
#   divisor-threshold <n> <r> <delta> expect <t> cite <key>
#   min-t <n> <r> <d> <k> <delta> expect <t> cite <key>
#   embed <n> <h0> <r> <q> <delta> [<d>] cite <key>
#       consistency: r = h0-1-n, q = r+1, delta = q+1, d >= r+1
#   degree-formula <n> <s> expect <v> cite <key>
#   base-degree-unit <n> expect <h> cite <key>
#       largest h with binom(h+n-1, n-1) <= n
#   prod-rel <n> <s> <base> expect-fiber <v> cite <key>
#       fiber * base = (s+1)^(n-1)
#   image-dim <n> <k> <s> cite <key>
#       product-with-P^s center: dim Z = n-k+s-1, section drop dim Z + 1,
#       dim Z at the floor n-k-1 exactly when s = 0
#   hypersurface-contains-linear <k> cite <key>
#   linear-section-bundle <k> <r> cite <key>
#   end                      close the record

fixture ExP
note product of two planes, center a divisor of class O(2,0)
space 2 2
bundle L 1 1
bundle D 2 0
segre expect 6 cite ExP
intersect L^3 D expect 6 cite ExP
h0 2L -D expect 6 cite ExP
section-iff L D threshold 2 tmax 8 cite ExP
divisor-threshold 4 4 6 expect 2 cite ExP
min-t 4 4 6 3 6 expect 2 cite ExP
end

fixture Range1-n3
note Segre product of a line and a plane, center a divisor of class O(2,1)
space 1 2
bundle L 1 1
bundle D 2 1
segre expect 3 cite Range1
intersect L^2 D expect 4 cite Range1
h0 L expect 6 cite Range1
h0 L -D expect 0 cite Range1
h0 2L -D expect 3 cite Range1
embed 3 6 2 3 4 3 cite Range1
end

fixture Range1-n4
note Segre product P^1 x P^3, center a divisor of class O(2,1)
space 1 3
bundle L 1 1
bundle D 2 1
segre expect 4 cite Range1
intersect L^3 D expect 5 cite Range1
h0 L expect 8 cite Range1
h0 L -D expect 0 cite Range1
embed 4 8 3 4 5 4 cite Range1
end

fixture Range1-n5
note Segre product P^1 x P^4, center a divisor of class O(2,1)
space 1 4
bundle L 1 1
bundle D 2 1
segre expect 5 cite Range1
intersect L^4 D expect 6 cite Range1
h0 L expect 10 cite Range1
h0 L -D expect 0 cite Range1
embed 5 10 4 5 6 5 cite Range1
end

fixture Range2-n3
note projective-bundle relative of the Segre example; stated invariants
note only, the ambient bundle is outside the product oracle
embed 3 7 3 4 5 4 cite Range2
end

fixture Man7-n4-s2
note projection from a linear divisor, n = 4 and normal twist s = 2
degree-formula 4 2 expect 40 cite kn1
base-degree-unit 4 expect 1 cite Man7
prod-rel 4 2 1 expect-fiber 27 cite prodRel
end

fixture Hyper-k2
note degree-d hypersurface in P^5 through a linear plane; the projection
note from the plane has a plane as image
hypersurface-contains-linear 2 cite Hyper
end

fixture New-k2-r2
note rank-3 split bundle over P^2 with a linear section; the image of the
note projection drops below the ambient dimension
linear-section-bundle 2 2 cite New
end

fixture Bilbao2-n4
note ambient a product with a P^s factor, the center contains the P^s
note direction; image dimension tracks s
image-dim 4 2 0 cite Bilbao2
image-dim 4 2 1 cite Bilbao2
image-dim 4 2 2 cite Bilbao2
end
)FIX";

}  // namespace castel
