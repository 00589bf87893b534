#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "braidfoq/freealg.hpp"
#include "braidfoq/json_io.hpp"
#include "braidfoq/presentation.hpp"

namespace braidfoq {

// ---------------------------------------------------------------- coassociativity

struct CoassociativityReport {
    bool ok = true;
    std::vector<std::string> failures;
};

/// (Delta (x) id) Delta = (id (x) Delta) Delta on every generator and its adjoint.
CoassociativityReport coassociativity_report(const Presentation& p);
bool coassociativity_check(const Presentation& p);

// ---------------------------------------------------------------- membership

enum class Verdict { InIdeal, UndecidedAtBound, NonzeroConstantObstruction };

std::string to_string(Verdict v);

struct MembershipOptions {
    static constexpr std::size_t kDefaultRowCap = 2'000'000;
    int bound = 3;
    std::size_t row_cap = kDefaultRowCap;
    unsigned workers = 1;
};

/// One summand coeff * (left . z^t G z^-t . right), G a relation or its adjoint.
/// In tensor certificates `leg` (1 or 2) says where the summand sits and
/// `other` is the word on the remaining leg; leg 0 means a plain element.
struct CertificateEntry {
    int leg = 0;
    Word left;
    std::size_t relation = 0;
    bool adjoint = false;
    int twist = 0;
    Word right;
    Word other;
    Scalar coeff;
};

struct MembershipCertificate {
    Verdict verdict = Verdict::UndecidedAtBound;
    int bound = 0;
    std::vector<CertificateEntry> combination;
    std::string note;
};

/// Span of a . r . b with letter words a, b, r a relation or adjoint, every
/// resulting word of length <= bound and |zexp| <= bound. Echelonised once.
class TruncatedIdeal {
public:
    TruncatedIdeal(const Presentation& p, MembershipOptions opts);
    ~TruncatedIdeal();
    TruncatedIdeal(TruncatedIdeal&&) noexcept;
    TruncatedIdeal& operator=(TruncatedIdeal&&) noexcept;

    const MembershipOptions& options() const noexcept;
    bool capped() const noexcept;
    std::size_t row_count() const noexcept;
    std::size_t rank() const noexcept;
    std::size_t component_count() const noexcept;
    /// The counit vanishes on every relation, so a nonzero counit obstructs membership.
    bool counit_obstructs() const noexcept;

    struct Reduction {
        Element residual;
        std::vector<CertificateEntry> combination;
    };
    /// residual = x - sum(combination); residual is zero iff x lies in the span.
    Reduction reduce(const Element& x) const;

private:
    struct Impl;
    std::unique_ptr<Impl> impl_;
};

/// The element coeff * left . z^t G z^-t . right for an entry.
Element certificate_term(const Presentation& p, const CertificateEntry& e);

MembershipCertificate ideal_membership(const Element& target, const TruncatedIdeal& ideal);
MembershipCertificate ideal_membership(const Tensor& target, const TruncatedIdeal& ideal);
MembershipCertificate ideal_membership(const Element& target, const Presentation& p, MembershipOptions opts = {});
MembershipCertificate ideal_membership(const Tensor& target, const Presentation& p, MembershipOptions opts = {});

bool replay(const MembershipCertificate& cert, const Element& target, const Presentation& p);
bool replay(const MembershipCertificate& cert, const Tensor& target, const Presentation& p);

struct WellDefinednessEntry {
    std::string label;
    MembershipCertificate certificate;
    bool replay_ok = false;
};

struct WellDefinednessReport {
    int bound = 0;
    std::size_t ideal_rows = 0;
    std::size_t ideal_rank = 0;
    std::vector<WellDefinednessEntry> entries;
    bool all_in_ideal() const;
    bool any_undecided() const;
};

/// Certifies Delta(r) in I (x) A + A (x) I for every relation r.
WellDefinednessReport well_definedness_check(const Presentation& p, MembershipOptions opts = {});

// ---------------------------------------------------------------- intertwiner

/// Expands t F - z^d F conj(t) with the given F (default f_matrix) and compares
/// each entry with the t-form invariance relations.
bool intertwiner_check(const OmegaData& data, const std::optional<ScalarMatrix>& f = std::nullopt);

json to_json(const Word& w);
json to_json(const MembershipCertificate& cert);
json to_json(const WellDefinednessReport& rep);

}  // namespace braidfoq
