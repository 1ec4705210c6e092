#include "permuto/homology.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace permuto {

namespace {

ModuleElement between_expansion_impl(const OrderedSetPartition& tau, int a, int i, int j,
                                     bool flip_sign) {
    ModuleElement out(tau.label_set());
    const Rat second_sign = flip_sign ? Rat(1) : Rat(-1);
    for (const auto& alpha : two_partitions_of(tau.block(a))) {
        if (!std::binary_search(alpha.first().begin(), alpha.first().end(), i)) continue;
        out.add(refine_at(tau, a, alpha), Rat(-1));
    }
    for (const auto& beta : two_partitions_of(tau.block(a + 1))) {
        if (!std::binary_search(beta.second().begin(), beta.second().end(), j)) continue;
        out.add(refine_at(tau, a + 1, beta), second_sign);
    }
    return out;
}

ModuleElement act_generator_impl(const TwoPartition& sigma, const ModuleElement& x,
                                 bool flip_sign) {
    ModuleElement out(x.label_set());
    for (const auto& [tau, coeff] : x.terms()) {
        const auto cls = classify_break(sigma, tau);
        switch (cls.kind) {
            case BreakClassification::Kind::at:
                out.add(refine_at(tau, cls.index, *cls.alpha), coeff);
                break;
            case BreakClassification::Kind::between: {
                const int a = cls.index;
                ModuleElement expansion = between_expansion_impl(
                    tau, a, tau.block(a).front(), tau.block(a + 1).front(), flip_sign);
                expansion *= coeff;
                out += expansion;
                break;
            }
            case BreakClassification::Kind::no_break:
                break;
        }
    }
    return out;
}

ModuleElement act_element_impl(const GoodElement& op, const ModuleElement& x, bool flip_sign) {
    if (op.label_set() != x.label_set())
        throw std::invalid_argument("act_element: label set mismatch");
    ModuleElement out(x.label_set());
    for (const auto& [tau, coeff] : op.terms()) {
        ModuleElement acc = x;
        for (const auto& sigma : good_family(tau)) acc = act_generator_impl(sigma, acc, flip_sign);
        acc *= coeff;
        out += acc;
    }
    return out;
}

void record_failure(LemmaCheck& check, const LemmaOptions& opts, const std::string& what) {
    ++check.failures;
    if (static_cast<int>(check.failure_samples.size()) < opts.max_failure_samples)
        check.failure_samples.push_back(what);
}

}  // namespace

std::vector<HomologyRelation> homology_relations(const LabelSet& B, int grade) {
    std::vector<HomologyRelation> out;
    for (const auto& sig : relation_signatures(B, grade)) {
        ModuleElement e(B);
        const GradeBasis& basis = grade_basis(B, grade);
        const auto vec = relation_vector(B, sig);
        for (std::size_t idx = 0; idx < vec.size(); ++idx)
            if (vec[idx] != 0) e.add(basis.partitions[idx], vec[idx]);
        out.push_back({std::move(e), sig});
    }
    return out;
}

ModuleElement act_generator(const TwoPartition& sigma, const ModuleElement& x) {
    return act_generator_impl(sigma, x, false);
}

ModuleElement module_between_expansion(const OrderedSetPartition& tau, int a, int i, int j) {
    if (a < 0 || a + 1 >= tau.length())
        throw std::invalid_argument("module_between_expansion: no block pair at index");
    const Block& ba = tau.block(a);
    const Block& bb = tau.block(a + 1);
    if (!std::binary_search(ba.begin(), ba.end(), i) ||
        !std::binary_search(bb.begin(), bb.end(), j))
        throw std::invalid_argument("module_between_expansion: i, j not in the adjacent blocks");
    return between_expansion_impl(tau, a, i, j, false);
}

ModuleElement act_element(const GoodElement& op, const ModuleElement& x) {
    return act_element_impl(op, x, false);
}

const RowSpan& relation_span_matrix(const LabelSet& B, int k) { return relation_span(B, k); }

bool is_zero(const ModuleElement& x) { return in_relation_span(x); }

GoodElement to_ring(const ModuleElement& x) {
    GoodElement out(x.label_set());
    for (const auto& [tau, c] : x.terms()) out.add(tau, c);
    return out;
}

ModuleElement act_on_unit(const GoodElement& e) {
    return act_element(e, ModuleElement::unit(e.label_set()));
}

ModuleElement concat_product(const ModuleElement& x, const ModuleElement& y) {
    const int m = x.label_set().size();
    const int n = y.label_set().size();
    ModuleElement out(LabelSet::segment(m + n));
    for (const auto& [t1, c1] : x.terms())
        for (const auto& [t2, c2] : y.terms()) out.add(concatenate(t1, t2), c1 * c2);
    return out;
}

LemmaReport verify_technical_lemma(const LabelSet& B, const LemmaOptions& opts) {
    LemmaReport report;
    report.n = B.size();
    report.sign_flipped = opts.flip_sign;

    const auto partitions = enumerate_partitions(B);
    const auto sigmas = two_partitions(B);

    // The `between` expansion does not depend on the choice of (i, j).
    {
        LemmaCheck check{"expansion choice independence", 0, 0, {}};
        for (const auto& tau : partitions) {
            for (int a = 0; a + 1 < tau.length(); ++a) {
                const Block& ba = tau.block(a);
                const Block& bb = tau.block(a + 1);
                const ModuleElement base =
                    between_expansion_impl(tau, a, ba.front(), bb.front(), opts.flip_sign);
                for (int i : ba)
                    for (int j : bb) {
                        ++check.cases;
                        const ModuleElement other =
                            between_expansion_impl(tau, a, i, j, opts.flip_sign);
                        if (!is_zero(other - base)) {
                            std::ostringstream os;
                            os << "tau=" << tau.to_string() << " a=" << a << " (i,j)=(" << i << ","
                               << j << ")";
                            record_failure(check, opts, os.str());
                        }
                    }
            }
        }
        report.checks.push_back(std::move(check));
    }

    // Acting on any linear relation gives zero in the quotient.
    {
        LemmaCheck check{"descent to the quotient", 0, 0, {}};
        for (int grade = 1; grade < B.size(); ++grade) {
            for (const auto& rel : homology_relations(B, grade)) {
                for (const auto& sigma : sigmas) {
                    ++check.cases;
                    if (!is_zero(act_generator_impl(sigma, rel.element, opts.flip_sign))) {
                        std::ostringstream os;
                        os << "sigma=" << sigma.to_string() << " relation(tau="
                           << rel.signature.tau.to_string() << ",a=" << rel.signature.a
                           << ",i=" << rel.signature.i << ",j=" << rel.signature.j << ")";
                        record_failure(check, opts, os.str());
                    }
                }
            }
        }
        report.checks.push_back(std::move(check));
    }

    // Generator actions commute modulo relations.
    {
        LemmaCheck check{"commuting actions", 0, 0, {}};
        for (std::size_t s1 = 0; s1 < sigmas.size(); ++s1)
            for (std::size_t s2 = s1 + 1; s2 < sigmas.size(); ++s2)
                for (const auto& tau : partitions) {
                    ++check.cases;
                    const ModuleElement mu = ModuleElement::generator(tau);
                    const ModuleElement ab = act_generator_impl(
                        sigmas[s1], act_generator_impl(sigmas[s2], mu, opts.flip_sign),
                        opts.flip_sign);
                    const ModuleElement ba = act_generator_impl(
                        sigmas[s2], act_generator_impl(sigmas[s1], mu, opts.flip_sign),
                        opts.flip_sign);
                    if (!is_zero(ab - ba)) {
                        std::ostringstream os;
                        os << "sigma1=" << sigmas[s1].to_string()
                           << " sigma2=" << sigmas[s2].to_string() << " tau=" << tau.to_string();
                        record_failure(check, opts, os.str());
                    }
                }
        report.checks.push_back(std::move(check));
    }

    // The degree-one ideal generators annihilate every mu(tau).
    {
        LemmaCheck check{"linear generators annihilate", 0, 0, {}};
        const auto& labels = B.labels();
        for (std::size_t x = 0; x < labels.size(); ++x)
            for (std::size_t y = x + 1; y < labels.size(); ++y) {
                const GoodElement rel = generator_relation_linear(B, labels[x], labels[y]);
                for (const auto& tau : partitions) {
                    ++check.cases;
                    const ModuleElement image =
                        act_element_impl(rel, ModuleElement::generator(tau), opts.flip_sign);
                    if (!is_zero(image)) {
                        std::ostringstream os;
                        os << "r1(" << labels[x] << "," << labels[y] << ") tau=" << tau.to_string();
                        record_failure(check, opts, os.str());
                    }
                }
            }
        report.checks.push_back(std::move(check));
    }

    // Quadratic generators l_sigma l_rho with incomparable first blocks.
    {
        LemmaCheck check{"quadratic generators annihilate", 0, 0, {}};
        for (const auto& sigma : sigmas)
            for (const auto& rho : sigmas) {
                const Block& s1 = sigma.first();
                const Block& r1 = rho.first();
                const bool s_in_r = std::includes(r1.begin(), r1.end(), s1.begin(), s1.end());
                const bool r_in_s = std::includes(s1.begin(), s1.end(), r1.begin(), r1.end());
                if (s_in_r || r_in_s) continue;  // comparable: not a quadratic generator
                for (const auto& tau : partitions) {
                    ++check.cases;
                    const ModuleElement image = act_generator_impl(
                        sigma, act_generator_impl(rho, ModuleElement::generator(tau), opts.flip_sign),
                        opts.flip_sign);
                    if (!is_zero(image)) {
                        std::ostringstream os;
                        os << "r2(" << sigma.to_string() << "," << rho.to_string()
                           << ") tau=" << tau.to_string();
                        record_failure(check, opts, os.str());
                    }
                }
            }
        report.checks.push_back(std::move(check));
    }

    return report;
}

}  // namespace permuto
