#include "tic/tracks.hpp"

namespace tic {

bool paraphrase_gt_sqrt2(const Rational& x) { return x.sign() > 0 && x * x > Rational(2); }

}  // namespace tic
