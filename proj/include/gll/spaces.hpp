#ifndef GLL_SPACES_HPP
#define GLL_SPACES_HPP

#include <stdexcept>
#include <string>

namespace gll {

/// Thrown when exponent parameters fall outside a space's admissible set.
struct InvalidSpec : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

enum class SpaceKind {
    Lorentz,             // (int (t^{1/p} f*)^q dt/t)^{1/q}
    GrandLorentz,        // sup/inf over eps of eps^theta times the shifted Lorentz norm
    DyadicGrandLorentz,  // discrete characterization over dyadic points
    LorentzKaramata,     // weight (1 - ln t)^{-theta} instead of extremizing over eps
    AfhGrandLorentz,     // sup over s of (1 - ln s)^{-theta} tail integrals
    GrandLebesgue,       // sup over eps of eps^theta ||f||_{p-eps} and variants
    SmallLebesgue,       // outer log integral of inner prefix integrals
};

/// Which of the three equivalent grand-Lebesgue expressions to evaluate.
enum class GrandLebesgueForm {
    EpsilonSup,   // sup_eps eps^theta ||f||_{L_{p-eps}}
    RearrFormula, // sup_s (1-ln s)^{-theta/p} (int_s^1 f*^p dt)^{1/p}
    GLpTheta,     // sup_eps eps^theta ||f||_{L_{p(eps)}}, 1/p(eps) = 1/p + eps
};

/// Upper limit of the eps scan for the grand-Lebesgue forms.  Full is the
/// defining range; ProofRange shrinks it to where the two eps forms compare
/// termwise; Restricted halves the defining range away from the L_1 end.
enum class EpsRange {
    Full,       // EpsilonSup: p-1;     GLpTheta: 1
    ProofRange, // EpsilonSup: p/2;     GLpTheta: 1/p
    Restricted, // EpsilonSup: (p-1)/2; GLpTheta: 1/p
};

struct SpaceSpec {
    SpaceKind kind = SpaceKind::Lorentz;
    double p = 2.0;
    double q = 1.0;  // secondary exponent; tau for the Karamata/AFH/dyadic kinds
    double theta = 0.0;
    GrandLebesgueForm form = GrandLebesgueForm::EpsilonSup;
    EpsRange range = EpsRange::Full;
};

/// Throws InvalidSpec when the exponents are outside the admissible set for
/// the space kind.
void validate(const SpaceSpec& spec);

/// Stable text form, e.g. "grand-lorentz:p=2,q=1,theta=1".  Round-trips
/// through parse_space.
std::string label(const SpaceSpec& spec);

/// Parse "kind:key=value,key=value".  Keys: p, q, tau (alias of q), theta,
/// form (eps-sup | tail-sup | eps-shift), range (full | proof | half).
/// "inf" is accepted for p, q, tau.  Throws InvalidSpec on bad input.
SpaceSpec parse_space(const std::string& text);

}  // namespace gll

#endif
