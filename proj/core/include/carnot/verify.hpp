#ifndef CARNOT_VERIFY_HPP
#define CARNOT_VERIFY_HPP

#include <optional>
#include <string>

#include "carnot/report.hpp"
#include "carnot/sym258.hpp"

namespace carnot {

/// Deliberate corruption of one model field, used to prove the verifier can
/// fail. Grammar (target is X0 or X1..X8):
///   "<target>:drop-<mono>-term"            drop <mono> from every component
///   "<target>:c<k>:drop:<mono>"            drop <mono> from component k
///   "<target>:c<k>:add:<mono>[:<rat>]"     add rat * mono (default 1)
///   "<target>:c<k>:scale:<mono>:<rat>"     scale that coefficient by rat
/// where <mono> is "1" or a product like "x7" or "x1^2x2^2".
struct Mutation {
    enum class Op { DropEverywhere, Drop, Add, Scale };

    int target = 0;  // 0 = the symmetry field, 1..8 = model fields
    Op op = Op::DropEverywhere;
    int component = 0;  // unused for DropEverywhere
    Monomial monomial{1};
    Rational value;

    static Mutation parse(const std::string& spec);

    /// Applies to a field on R^8; throws when nothing matches a drop/scale.
    void apply(VectorField& field) const;
};

struct VerifyAllOptions {
    int gg_step = 4;
    std::optional<std::string> mutate;
};

/// Full verification sweep: the free nilpotent model theorem at the given
/// step, the symmetric model's multiplication table, the symmetry relations,
/// and the Carnot axioms of the extracted structure constants. The mutate
/// hook corrupts the named field before verification.
VerificationReport verify_all(const VerifyAllOptions& options = {});

}  // namespace carnot

#endif
