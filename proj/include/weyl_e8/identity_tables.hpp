/*
   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#pragma once

#include <string_view>

namespace weyl_e8::tables {

// Each table holds lines "name=expression". Expressions use + - * / ^,
// parentheses, integers, variable names, Delta and P165.

/// a_i, b_j as rational functions of A_i, B_j, E4, E6 and Delta.
inline constexpr std::string_view kAbInModularForms = R"(a0=((E4)/(12))
a1=0
a2=((6)/(E4*Delta))*(-E4*A2+A1^2)
a3=((1)/(9*E4^2*Delta^2))*(-7*E4^2*E6*A3-20*E4^3*B3-9*E4*E6*A1*A2+30*E4^2*A1*B2+6*E6*A1^3)
a4=((1)/(288*E4^3*Delta^3))*(576*E4^3*Delta*A4+32256*E4^2*Delta*A1*A3-9*E4^5*A2^2-30*E4^3*E6*A2*B2-25*E4^4*B2^2+(60*E4^4-12*E4*E6^2)*A1^2*A2+80*E4^2*E6*A1^2*B2+(-70*E4^3+6*E6^2)*A1^4)
b0=((E6)/(216))
b1=-((4)/(E4))*A1
b2=((5)/(6*E4^2*Delta))*(E4^2*B2-E6*A1^2)
b3=((1)/(108*E4^3*Delta^2))*(-7*E4^5*A3-20*E4^3*E6*B3-9*E4^4*A1*A2+30*E4^2*E6*A1*B2+(16*E4^3-10*E6^2)*A1^3)
b4=((1)/(1728*E4^4*Delta^3))*(-8640*E4^4*Delta*B4+138240*E4^3*Delta*A1*B3+9*E4^5*E6*A2^2+30*E4^6*A2*B2+25*E4^4*E6*B2^2-48*E4^4*E6*A1^2*A2+(-140*E4^5+60*E4^2*E6^2)*A1^2*B2+(74*E4^3*E6-10*E6^3)*A1^4)
b5=((1)/(72*E4^5*Delta^3))*(-36288*E4^4*Delta*A5-294*E4^6*A2*A3-770*E4^4*E6*B2*A3-840*E4^4*E6*A2*B3-2200*E4^5*B2*B3+168*E4^5*A1^2*A3+480*E4^3*E6*A1^2*B3-621*E4^5*A1*A2^2+3525*E4^4*A1*B2^2+1224*E4^4*A1^3*A2-240*E4^2*E6*A1^3*B2+(-456*E4^3+24*E6^2)*A1^5)
b6=((1)/(4478976*E4^6*Delta^5))*(-19906560*E4^6*Delta^2*B6-188116992*E4^4*E6*Delta^2*A1*A5-5184*E4^7*E6*Delta*A2*A4-8640*E4^8*Delta*B2*A4-103680*E4^8*Delta*A2*B4-172800*E4^6*E6*Delta*B2*B4+12672*E4^6*E6*Delta*A1^2*A4+17280*(5*E4^7+9*E4^4*E6^2)*Delta*A1^2*B4+112896*E4^7*E6*Delta*A3^2+645120*E4^8*Delta*A3*B3+921600*E4^6*E6*Delta*B3^2-1717632*E4^6*E6*Delta*A1*A2*A3-362880*(4*E4^7+11*E4^4*E6^2)*Delta*A1*B2*A3+483840*(4*E4^7-9*E4^4*E6^2)*Delta*A1*A2*B3-11404800*E4^5*E6*Delta*A1*B2*B3+1161216*E4^5*E6*Delta*A1^3*A3-92160*(37*E4^6-9*E4^3*E6^2)*Delta*A1^3*B3+(135*E4^9*E6+54*E4^6*E6^3)*A2^3+(405*E4^10+540*E4^7*E6^2)*A2^2*B2+1575*E4^8*E6*A2*B2^2+(375*E4^9+500*E4^6*E6^2)*B2^3+(-3159*E4^8*E6+1701*E4^5*E6^3)*A1^2*A2^2+(-3060*E4^9-1800*E4^6*E6^2)*A1^2*A2*B2+(6975*E4^7*E6-11025*E4^4*E6^3)*A1^2*B2^2+(6768*E4^7*E6-3024*E4^4*E6^3)*A1^4*A2+(4260*E4^8+1800*E4^5*E6^2+180*E4^2*E6^4)*A1^4*B2+(-3692*E4^6*E6+504*E4^3*E6^3-12*E6^5)*A1^6)
)";

/// c_i, d_j as rational functions of A_i, B_j, E4, E6 and Delta.
inline constexpr std::string_view kCdInModularForms = R"(c0=((E4)/(12))
c1=((48*A1)/(E6))
c2=((6)/(E6^2*Delta))*(-E6^2*A2+E4^2*A1^2)
c3=((1)/(9*E6^3*Delta^2))*(-7*E6^4*A3-20*E4*E6^3*B3-9*E4^2*E6^2*A1*A2+30*E6^3*A1*B2+(3*E4^4+3*E4*E6^2)*A1^3)
c4=((1)/(288*E6^4*Delta^3))*(576*E6^4*Delta*A4-92160*E6^3*Delta*A1*B3-9*E4^2*E6^4*A2^2-30*E6^5*A2*B2-25*E4*E6^4*B2^2+(-12*E4^4*E6^2+60*E4*E6^4)*A1^2*A2+80*E4^2*E6^3*A1^2*B2+(2*E4^6+6*E4^3*E6^2-72*E6^4)*A1^4)
d0=((E6)/(216))
d1=0
d2=((5)/(6*E6*Delta))*(E6*B2-E4*A1^2)
d3=((1)/(108*E6^2*Delta^2))*(-7*E4^2*E6^2*A3-20*E6^3*B3-9*E4*E6^2*A1*A2+30*E4^2*E6*A1*B2+(-20*E4^3+26*E6^2)*A1^3)
d4=((1)/(1728*E6^3*Delta^3))*(-8640*E6^3*Delta*B4-48384*E4*E6^2*Delta*A1*A3+9*E4*E6^4*A2^2+30*E4^2*E6^3*A2*B2+25*E6^4*B2^2+(-36*E4^3*E6^2-12*E6^4)*A1^2*A2+(60*E4^4*E6-140*E4*E6^3)*A1^2*B2+(-30*E4^5+94*E4^2*E6^2)*A1^4)
d5=((1)/(72*E6^4*Delta^3))*(-21*E4^2*E6^4*A5-60*E4^2*E6^3*A1*B4-294*E4*E6^4*A2*A3-2200*E6^4*B2*B3+(-168*E4^3*E6^2+336*E6^4)*A1^2*A3+480*E4*E6^3*A1^2*B3-513*E6^4*A1*A2^2+360*E4*E6^3*A1*A2*B2-216*E4^2*E6^2*A1^3*A2+(240*E4^3*E6-1440*E6^3)*A1^3*B2+(-96*E4^4+432*E4*E6^2)*A1^5)+((1)/(72*Delta^3))*((P165)/(E4))
d6=((1)/(13436928*E6^5*Delta^5))*(-59719680*E6^5*Delta^2*B6-564350976*E4*E6^4*Delta^2*A1*A5-15552*E4*E6^6*Delta*A2*A4-25920*E4^2*E6^5*Delta*B2*A4-311040*E4^2*E6^5*Delta*A2*B4-518400*E6^6*Delta*B2*B4+38016*E6^6*Delta*A1^2*A4-51840*(9*E4^4*E6^3-23*E4*E6^5)*Delta*A1^2*B4+338688*E4*E6^6*Delta*A3^2+1935360*E4^2*E6^5*Delta*A3*B3+2764800*E6^6*Delta*B3^2-72576*(63*E4^3*E6^4+8*E6^6)*Delta*A1*A2*A3-16329600*E4*E6^5*Delta*A1*B2*A3-7257600*E4*E6^5*Delta*A1*A2*B3-34214400*E4^2*E6^4*Delta*A1*B2*B3-870912*(E4^5*E6^2-5*E4^2*E6^4)*Delta*A1^3*A3+552960*(9*E4^3*E6^3-23*E6^5)*Delta*A1^3*B3+(405*E4^3*E6^6+162*E6^8)*A2^3+(1215*E4^4*E6^5+1620*E4*E6^7)*A2^2*B2+4725*E4^2*E6^6*A2*B2^2+(1125*E4^3*E6^5+1500*E6^7)*B2^3+(-5103*E4^5*E6^4+729*E4^2*E6^6)*A1^2*A2^2+(1620*E4^6*E6^3-12420*E4^3*E6^5-3780*E6^7)*A1^2*A2*B2+(33075*E4^4*E6^4-45225*E4*E6^6)*A1^2*B2^2+(-648*E4^7*E6^2+10368*E4^4*E6^4+1512*E4*E6^6)*A1^4*A2+(540*E4^8*E6-7560*E4^5*E6^3+25740*E4^2*E6^5)*A1^4*B2+(-180*E4^9+1512*E4^6*E6^2-3924*E4^3*E6^4-7008*E6^6)*A1^6)
)";

/// A_i, B_j in terms of a_i, b_j, with Delta = a0^3 - 27 b0^2.
inline constexpr std::string_view kModularFormsInAb = R"(A1=-3*a0*b1
A2=((9*a0*b1^2-2*Delta*a2)/(12))
A3=((-21*a0*b1^3-12*Delta*a0*b3-6*Delta*a2*b1+18*Delta*a3*b0)/(112))
A4=((1)/(64))*(4*Delta*a0^2*a2^2+3*a0*b1^4-96*Delta*a0*b1*b3+48*Delta*a0*b2^2-144*Delta*a2*b0*b2+36*Delta*a2*b1^2+144*Delta*a3*b0*b1+32*Delta^2*a4)
A5=((1)/(5376))*(36*Delta*a0^2*a2^2*b1-63*a0*b1^5+216*Delta*a0*b1^2*b3-144*Delta*a0*b1*b2^2-432*Delta*a2*b0*b1*b2-100*Delta*a2*b1^3+1980*Delta*a3*b0*b1^2-128*Delta^2*a0*b5-112*Delta^2*a2*b3+176*Delta^2*a3*b2)
B2=((135*b0*b1^2+12*Delta*b2)/(10))
B3=((-3*Delta*a0^2*a3-270*b0*b1^3+54*Delta*b0*b3-36*Delta*b1*b2)/(80))
B4=((1)/(160))*(-16*Delta*a0^2*a2*b2+24*Delta*a0^2*a3*b1+12*Delta*a0*a2^2*b0+135*b0*b1^4-432*Delta*b0*b1*b3+144*Delta*b0*b2^2+24*Delta*b1^2*b2-32*Delta^2*b4)
B6=((1)/(2560))*(48*Delta*a0^3*b1^2*b4+48*Delta*a0^2*a2*b1^2*b2-144*Delta*a0^2*a3*b1^3-144*Delta*a0^2*a4*b0*b1^2-108*Delta*a0*a2^2*b0*b1^2+135*b0*b1^6-64*Delta^2*a0^2*a2*b4+48*Delta^2*a0^2*a3*b3-96*Delta^2*a0^2*a4*b2-8*Delta^2*a0*a2^2*b2+16*Delta^2*a0*a2*a3*b1+144*Delta^2*a0*a2*a4*b0-36*Delta^2*a0*a3^2*b0+12*Delta^2*a2^3*b0+1296*Delta*b0^2*b1^2*b4-216*Delta*b0*b1^3*b3+36*Delta*b1^4*b2-2592*Delta^2*b0*b1*b5+1152*Delta^2*b0*b2*b4-432*Delta^2*b0*b3^2-576*Delta^3*b6)
Delta=a0^3-27*b0^2
)";

/// A_i, B_j in terms of c_i, d_j, with Delta = c0^3 - 27 d0^2.
inline constexpr std::string_view kModularFormsInCd = R"(A1=((9*c1*d0)/(2))
A2=((3*c0^2*c1^2-8*Delta*c2)/(48))
A3=((21*c0*c1^3*d0-96*Delta*c0*d3+96*Delta*c1*d2+144*Delta*c3*d0)/(896))
A4=((1)/(1024))*(9*c1^4*d0^2-128*Delta*c0^2*c1*c3+64*Delta*c0^2*c2^2-16*Delta*c0*c1^2*c2+3*Delta*c1^4+768*Delta*c0*d2^2+2304*Delta*c1*d0*d3-2304*Delta*c2*d0*d2+512*Delta^2*c4)
A5=((1)/(172032))*(21*c0^2*c1^5*d0+576*Delta*c0^2*c1^2*d3+768*Delta*c0^2*c1*c2*d2-384*Delta*c0*c1^3*d2+5280*Delta*c0*c1^2*c3*d0-1728*Delta*c0*c1*c2^2*d0-224*Delta*c1^3*c2*d0+6912*Delta*c1*d0*d2^2-4096*Delta^2*c0*d5+2048*Delta^2*c1*d4-3584*Delta^2*c2*d3+5632*Delta^2*c3*d2)
B2=((45*c0*c1^2*d0+48*Delta*d2)/(40))
B3=((270*c1^3*d0^2-24*Delta*c0^2*c3+12*Delta*c0*c1*c2-3*Delta*c1^3+432*Delta*d0*d3)/(640))
B4=((1)/(2560))*(15*c0^2*c1^4*d0+384*Delta*c0^2*c1*d3-256*Delta*c0^2*c2*d2-96*Delta*c0*c1^2*d2-576*Delta*c0*c1*c3*d0+192*Delta*c0*c2^2*d0-96*Delta*c1^2*c2*d0+2304*Delta*d0*d2^2-512*Delta^2*d4)
B6=((1)/(163840))*(135*c1^6*d0^3+48*Delta*c0^2*c1^4*d2+1344*Delta*c0^2*c1^3*c3*d0-576*Delta*c0^2*c1^2*c2^2*d0+48*Delta*c0*c1^4*c2*d0-3*Delta*c1^6*d0+13824*Delta*c0*c1^2*d0^2*d4-8640*Delta*c1^3*d0^2*d3+6912*Delta*c1^2*c2*d0^2*d2-20736*Delta*c1^2*c4*d0^3+9216*Delta^2*c0^2*c1*d5-4096*Delta^2*c0^2*c2*d4+3072*Delta^2*c0^2*c3*d3-6144*Delta^2*c0^2*c4*d2-768*Delta^2*c0*c1^2*d4+1536*Delta^2*c0*c1*c2*d3-1536*Delta^2*c0*c1*c3*d2-512*Delta^2*c0*c2^2*d2+9216*Delta^2*c0*c2*c4*d0-2304*Delta^2*c0*c3^2*d0-192*Delta^2*c1^3*d3-9216*Delta^2*c1^2*c4*d0-1536*Delta^2*c1*c2*c3*d0+768*Delta^2*c2^3*d0+73728*Delta^2*d0*d2*d4-27648*Delta^2*d0*d3^2-36864*Delta^3*d6)
Delta=c0^3-27*d0^2
)";

/// The weight 16, index 5 form P165.
inline constexpr std::string_view kP165 = R"(P165=864*A1^3*A2+3825*A1*B2^2-770*E6*A3*B2-840*E6*A2*B3+60*E6*A1*B4+21*E6^2*A5
)";

/// P165 / E4 in terms of c_i, d_j.
inline constexpr std::string_view kP165OverE4InCd = R"(P165_over_E4=-((27*d0)/(128))*(-7110*c0*c1^5*d0^2+140*Delta*c0^2*c1^3*c2-21*Delta*c0*c1^5-1344*Delta*c0^2*c1*d2^2-9648*Delta*c0*c1^2*d0*d3+576*Delta*c0*c1*c2*d0*d2-6864*Delta*c1^3*d0*d2+648*Delta*c1^2*c3*d0^2+2160*Delta*c1*c2^2*d0^2+448*Delta^2*c0*c2*c3-168*Delta^2*c1^2*c3-224*Delta^2*c1*c2^2+9216*Delta^2*d0*d5-8448*Delta^2*d2*d3)
)";

}  // namespace weyl_e8::tables
