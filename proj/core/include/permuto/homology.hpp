#pragma once

#include <string>
#include <vector>

#include "permuto/formal_sum.hpp"
#include "permuto/label_set.hpp"
#include "permuto/partition.hpp"
#include "permuto/ring.hpp"

namespace permuto {

// Element of the homology side: a combination of generators mu(tau) subject
// to the linear relations shared with the ring presentation.
struct ModuleTag {};
using ModuleElement = FormalSum<ModuleTag>;

struct HomologyRelation {
    ModuleElement element;
    RelationSignature signature;
};

// All relations of a fixed grade (the homology reading of the ring's
// relation vectors).
std::vector<HomologyRelation> homology_relations(const LabelSet& B, int grade);

// Action of a generator l_sigma on the module, term by term through the
// break trichotomy: between -> alternating expansion with i = min(tau_a),
// j = min(tau_{a+1}); at -> mu(sigma * tau); no break -> 0.
ModuleElement act_generator(const TwoPartition& sigma, const ModuleElement& x);

// The `between` expansion of l_sigma mu(tau) for an explicit admissible
// (i, j). Different choices agree modulo relations; the verifier checks it.
ModuleElement module_between_expansion(const OrderedSetPartition& tau, int a, int i, int j);

// Action of a ring element: expand each good monomial through its good
// family and fold act_generator. Linear in both arguments.
ModuleElement act_element(const GoodElement& op, const ModuleElement& x);

// Row-reduced span of the grade-k relations in the coordinates of
// (k+1)-partitions (enumeration order); cached.
const RowSpan& relation_span_matrix(const LabelSet& B, int k);

// Vanishing in the quotient: every grade component lies in the relation
// span. Inhomogeneous input is decomposed and tested per grade.
bool is_zero(const ModuleElement& x);

// s: mu(tau) -> m(tau), linear.
GoodElement to_ring(const ModuleElement& x);

// t: e -> e . mu(epsilon). Mutually inverse with to_ring modulo relations.
ModuleElement act_on_unit(const GoodElement& e);

// Bilinear extension of concatenation; the result lives over the combined
// integer segment.
ModuleElement concat_product(const ModuleElement& x, const ModuleElement& y);

struct LemmaCheck {
    std::string name;
    long long cases = 0;
    long long failures = 0;
    std::vector<std::string> failure_samples;  // capped

    bool passed() const { return failures == 0; }
};

struct LemmaReport {
    int n = 0;
    bool sign_flipped = false;
    std::vector<LemmaCheck> checks;

    bool ok() const {
        for (const auto& c : checks)
            if (!c.passed()) return false;
        return true;
    }
};

struct LemmaOptions {
    // Negative control: flip the sign of the second sum in the `between`
    // expansion. Descent or commutation must then fail.
    bool flip_sign = false;
    int max_failure_samples = 5;
};

// Executable content of the multiplication-table lemma, five sub-checks:
//   1. choice independence of the `between` expansion,
//   2. the action descends to the quotient by the linear relations,
//   3. generator actions pairwise commute modulo relations,
//   4. the linear ideal generators annihilate every mu(tau),
//   5. the quadratic ideal generators annihilate every mu(tau).
LemmaReport verify_technical_lemma(const LabelSet& B, const LemmaOptions& opts = {});

}  // namespace permuto
