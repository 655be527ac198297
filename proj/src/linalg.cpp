#include "e7forge/linalg.hpp"

#include <cmath>

namespace e7f {

double deviation_from_identity(const Mat& m) {
    Mat d = m - Mat::Identity(m.rows(), m.cols());
    return max_abs(d);
}

double unitarity_residual(const Mat& m) {
    Mat d = m.adjoint() * m - Mat::Identity(m.rows(), m.cols());
    return max_abs(d);
}

Mat expm(const Mat& a) {
    // Higham's degree-13 Pade coefficients.
    static const double b[] = {64764752532480000.0, 32382376266240000.0, 7771770303897600.0,
                               1187353796428800.0,  129060195264000.0,   10559470521600.0,
                               670442572800.0,      33522128640.0,       1323241920.0,
                               40840800.0,          960960.0,            16380.0,
                               182.0,               1.0};
    const Eigen::Index n = a.rows();
    double nrm = a.cwiseAbs().rowwise().sum().maxCoeff(); // inf-norm
    int squarings = 0;
    const double theta13 = 5.371920351148152;
    if (nrm > theta13) {
        squarings = static_cast<int>(std::ceil(std::log2(nrm / theta13)));
        if (squarings < 0) squarings = 0;
    }
    Mat as = a / std::pow(2.0, squarings);

    Mat a2 = as * as;
    Mat a4 = a2 * a2;
    Mat a6 = a2 * a4;
    Mat id = Mat::Identity(n, n);

    Mat u = as * (a6 * (b[13] * a6 + b[11] * a4 + b[9] * a2) + b[7] * a6 + b[5] * a4 +
                  b[3] * a2 + b[1] * id);
    Mat v = a6 * (b[12] * a6 + b[10] * a4 + b[8] * a2) + b[6] * a6 + b[4] * a4 + b[2] * a2 +
            b[0] * id;

    Mat num = v + u;
    Mat den = v - u;
    Mat r = den.partialPivLu().solve(num);
    for (int k = 0; k < squarings; ++k) r = r * r;
    return r;
}

} // namespace e7f
