#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <utility>
#include <variant>
#include <vector>

#include "qslice/errors.hpp"
#include "qslice/tag.hpp"

namespace qslice {

/// Bit vector over the model's variables; variable i is bits[i].
/// Spin view: s_i = 1 - 2 x_i (x = 0 <-> s = +1).
using Assignment = std::vector<std::uint8_t>;

inline int spin_of(std::uint8_t bit) { return 1 - 2 * static_cast<int>(bit); }

/// Structured label for VRP variables x_{a,i,s}.
struct VarLabel {
    int vehicle = 0;
    int location = 0;
    int step = 0;
    friend auto operator<=>(const VarLabel&, const VarLabel&) = default;
};

using VarPair = std::pair<int, int>; // stored with first < second

inline VarPair make_pair_ordered(int i, int j) {
    if (i == j) throw ValidationError("quadratic term requires two distinct variables");
    return i < j ? VarPair{i, j} : VarPair{j, i};
}

/// Quadratic binary model x^T Q x + c with per-term tags.
/// Tags partition the terms; constants are accounted per tag so that the
/// tag-group energies sum exactly to the full energy.
class QuboModel {
public:
    struct Term {
        double coeff = 0.0;
        Tag tag;
    };

    QuboModel() = default;
    explicit QuboModel(int num_vars);

    int num_vars() const { return num_vars_; }

    void add_linear(int v, double coeff, const Tag& tag = Tag::objective());
    void add_quadratic(int i, int j, double coeff, const Tag& tag = Tag::objective());
    void add_constant(double value, const Tag& tag = Tag::objective());

    const std::map<int, Term>& linear() const { return linear_; }
    const std::map<VarPair, Term>& quadratic() const { return quadratic_; }
    const std::map<Tag, double>& constants() const { return constants_; }

    /// Total constant contribution (sum over tag groups).
    double offset() const;

    /// All tags present in the model (terms and constants).
    std::set<Tag> tags() const;

    /// Energy of a full assignment. Throws DimensionError on length mismatch.
    double evaluate(const Assignment& x) const;

    /// Energy restricted to one tag group (its terms and constant).
    double evaluate_tag_group(const Tag& tag, const Assignment& x) const;

    /// Energy restricted to a set of tags.
    double evaluate_tags(const std::set<Tag>& tags, const Assignment& x) const;

    // Variable labels (all-or-none within a model).
    bool has_labels() const { return !labels_.empty(); }
    const std::optional<VarLabel>& label(int v) const;
    void set_label(int v, VarLabel l);

private:
    void check_var(int v) const;

    int num_vars_ = 0;
    std::map<int, Term> linear_;
    std::map<VarPair, Term> quadratic_;
    std::map<Tag, double> constants_;
    std::vector<std::optional<VarLabel>> labels_;
};

/// Ising model over spins s_i in {+1,-1}: offset + sum h_i s_i + sum J_ij s_i s_j.
class IsingModel {
public:
    IsingModel() = default;
    explicit IsingModel(int num_vars);

    int num_vars() const { return num_vars_; }

    void add_field(int v, double h);
    void add_coupling(int i, int j, double J);
    void add_constant(double value) { offset_ += value; }

    const std::map<int, double>& fields() const { return h_; }
    const std::map<VarPair, double>& couplings() const { return J_; }
    double offset() const { return offset_; }

    /// Energy of an assignment in the bit view (spins derived as 1 - 2x).
    double evaluate(const Assignment& x) const;

private:
    void check_var(int v) const;

    int num_vars_ = 0;
    std::map<int, double> h_;
    std::map<VarPair, double> J_;
    double offset_ = 0.0;
};

/// Either model kind; slices of a decomposition match their source's kind.
using AnyModel = std::variant<QuboModel, IsingModel>;

int model_num_vars(const AnyModel& m);
double model_evaluate(const AnyModel& m, const Assignment& x);

/// Change of basis, s = 1 - 2x. Energy preserving; tags are dropped
/// (IsingModel carries none).
IsingModel qubo_to_ising(const QuboModel& q);

/// Inverse change of basis; all resulting terms are tagged `objective`.
QuboModel ising_to_qubo(const IsingModel& m);

/// Penalty energy: the sum of all penalty-tagged groups (vehicle/coupling)
/// of `model` at `x`. Zero iff every encoded constraint is satisfied.
double penalty_energy(const QuboModel& model, const Assignment& x);

Assignment assignment_from_mask(std::uint64_t mask, int n);
std::uint64_t mask_from_assignment(const Assignment& x);

/// String form of a basis index; character i is variable i (LSB first).
std::string bitstring_from_mask(std::uint64_t mask, int n);
std::uint64_t mask_from_bitstring(const std::string& s);

} // namespace qslice
