#include "absaf/fixtures.hpp"

#include "absaf/io.hpp"

namespace absaf::fixtures {

const std::string_view canada_apx = R"(% Canadian electoral reform (cid = comment id in the source data)
arg(p1).  % cid 21
arg(f1).  % cid 16
arg(p2).  % cid 42
arg(f2).  % cid 15
arg(p3).  % cid 43
arg(s1).  % cid 162
arg(m1).  % cid 163
arg(s2).  % cid 168
att(f1,p1).
att(f1,p2).
att(p2,f1).
att(f2,p3).
att(p3,f2).
att(m1,s1).
att(m1,s2).
att(s2,m1).
)";

const std::string_view canada_ballots = R"(# multiplicity : approved arguments
33 : p1
31 : p1,p2,p3
16 : p2
16 : p3
11 : f2
10 : p2,p3
9 : p1,p3
9 : f2,p1
8 : p1,p2
7 : f2,p1,p2,p3
6 : s2
4 : f1,f2
4 : p1,p2,p3,m1,s1
3 : f1
3 : f2,p2,p3
2 : f2,p1,p3
2 : f1,p1
2 : f2,p1,p2
2 : p1,p2,p3,s1
1 : p2,m1
1 : s1
1 : m1
1 : f2,p3
1 : p2,p3,s2
1 : f1,f2,p3
1 : p2,s1
1 : p1,p2,p3,s1,s2
1 : f1,p1,p2,p3
)";

namespace {

ABSAF build(std::string_view apx, std::string_view ballots) {
    auto af = parse_af(apx, AfFormat::apx);
    auto b = parse_ballots_text(af, ballots);
    return ABSAF(std::move(af), std::move(b));
}

}  // namespace

ABSAF canada() { return build(canada_apx, canada_ballots); }

ABSAF undefendable() {
    return build("arg(a). arg(b). arg(c). arg(d). arg(e). arg(f).\n"
                 "att(b,c). att(c,b). att(f,d). att(f,e). att(f,f).\n",
                 "1 : a,b\n1 : a,c,d,e\n");
}

ABSAF sjr_counterexample() {
    return build("arg(a). arg(b). arg(c). arg(d). arg(e).\n"
                 "att(a,b). att(b,c). att(b,d). att(b,e).\n"
                 "att(c,d). att(c,e). att(d,c). att(d,e). att(e,c). att(e,d).\n",
                 "1 : a\n1 : a,c\n1 : a,d\n1 : a,e\n");
}

ABSAF owa_jr_counterexample() {
    return build("arg(a). arg(b). arg(c). arg(d). arg(e). arg(f). arg(g). arg(h). arg(i). arg(j). arg(k).\n"
                 "att(d,e). att(e,d).\n"
                 "att(d,f). att(d,g). att(d,h). att(d,i). att(d,j). att(d,k).\n"
                 "att(f,i). att(i,f). att(f,j). att(j,f). att(f,k). att(k,f).\n"
                 "att(g,i). att(i,g). att(g,j). att(j,g). att(g,k). att(k,g).\n"
                 "att(h,i). att(i,h). att(h,j). att(j,h). att(h,k). att(k,h).\n",
                 "2 : a,b,c,d\n1 : e,f,g,h\n1 : e,i,j,k\n");
}

}  // namespace absaf::fixtures
