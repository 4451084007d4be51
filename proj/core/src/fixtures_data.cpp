#include "heosc/tables.hpp"

namespace heosc {

// Values transcribed verbatim from the published tables; see the fixture
// format note in tables.hpp.
const char* const embedded_fixtures_csv = R"fixtures(
# Regression fixtures sampled from the published helium-model tables.
# n1,n2,n3,quantity,value,tolerance
# tolerance: absolute for cos_theta/tan_alpha, relative for r/energy,
# residual passes when computed <= tolerance * value.
0.5,0.5,0.5,cos_theta,-0.082998,5e-4
0.5,0.5,0.5,tan_alpha,1.1308,5e-4
0.5,0.5,0.5,r,0.197,5e-3
0.5,0.5,0.5,energy,-15.8981,5e-3
0.5,0.5,0.5,residual,1.7038e-07,10
0.5,1,1,cos_theta,-0.26771,5e-4
0.5,1,1,tan_alpha,1.498,5e-4
0.5,1,1,r,0.29101,5e-3
0.5,1,1,energy,-9.7523,5e-3
1,1,1,cos_theta,-0.082998,5e-4
1,1,1,tan_alpha,1.1308,5e-4
1,1,1,r,0.788,5e-3
1,1,1,energy,-3.9745,5e-3
1,1,1,residual,6.8152e-07,10
1,1.5,1.5,cos_theta,-0.22725,5e-4
1,1.5,1.5,tan_alpha,1.2635,5e-4
1,1.5,1.5,r,1.0481,5e-3
1,1.5,1.5,energy,-2.8827,5e-3
1,1.5,1.5,residual,5.6404e-07,10
1,2,1,cos_theta,-0.70383,5e-4
1,2,1,tan_alpha,1.1356,5e-4
1,2,1,r,0.81107,5e-3
1,2,1,energy,-4.012,5e-3
1,1,2,cos_theta,0.58678,5e-4
1,1,2,tan_alpha,1.4276,5e-4
1,1,2,r,1.059,5e-3
1,1,2,energy,-2.4026,5e-3
1,2,2,cos_theta,-0.26771,5e-4
1,2,2,tan_alpha,1.498,5e-4
1,2,2,r,1.164,5e-3
1,2,2,energy,-2.4381,5e-3
1.5,1.5,1.5,cos_theta,-0.082998,5e-4
1.5,1.5,1.5,tan_alpha,1.1308,5e-4
1.5,1.5,1.5,r,1.773,5e-3
1.5,1.5,1.5,energy,-1.7665,5e-3
1.5,1,2,cos_theta,0.61809,5e-4
1.5,1,2,tan_alpha,1.1826,5e-4
1.5,1,2,r,2.1271,5e-3
1.5,1,2,energy,-1.2496,5e-3
2,2,2,cos_theta,-0.082998,5e-4
2,2,2,tan_alpha,1.1308,5e-4
2,2,2,r,3.152,5e-3
2,2,2,energy,-0.99363,5e-3
2,2,2,residual,2.7261e-06,10
2.5,1.5,1,cos_theta,0.047679,5e-4
2.5,1.5,1,tan_alpha,1.0485,5e-4
2.5,1.5,1,r,2.7018,5e-3
2.5,1.5,1,energy,-1.1845,5e-3
3,3,3,cos_theta,-0.082998,5e-4
3,3,3,tan_alpha,1.1308,5e-4
3,3,3,r,7.092,5e-3
3,3,3,energy,-0.44161,5e-3
3,2,4,cos_theta,0.61809,5e-4
3,2,4,tan_alpha,1.1826,5e-4
3,2,4,r,8.5082,5e-3
3,2,4,energy,-0.3124,5e-3
3.5,3.5,3.5,cos_theta,-0.082998,5e-4
3.5,3.5,3.5,tan_alpha,1.1308,5e-4
3.5,3.5,3.5,r,9.653,5e-3
3.5,3.5,3.5,energy,-0.32445,5e-3
4,4,4,cos_theta,-0.082998,5e-4
4,4,4,tan_alpha,1.1308,5e-4
4,4,4,r,12.608,5e-3
4,4,4,energy,-0.24841,5e-3
4,4,4,residual,1.0904e-05,10
4.5,2,2,cos_theta,0.45018,5e-4
4.5,2,2,tan_alpha,1.0499,5e-4
4.5,2,2,r,9.2888,5e-3
4.5,2,2,energy,-0.32031,5e-3
5,5,5,cos_theta,-0.082998,5e-4
5,5,5,tan_alpha,1.1308,5e-4
5,5,5,r,19.7,5e-3
5,5,5,energy,-0.15898,5e-3
5,2,3,cos_theta,0.66921,5e-4
5,2,3,tan_alpha,1.058,5e-4
5,2,3,r,13.9505,5e-3
5,2,3,energy,-0.1934,5e-3
)fixtures";

}  // namespace heosc
