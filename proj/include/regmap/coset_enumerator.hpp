#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "regmap/presentation.hpp"
#include "regmap/word.hpp"

namespace regmap {

enum class EnumStatus {
    complete,
    budget_exceeded,
};

// Thrown by higher-level operations that cannot return a partial result
// when the underlying enumeration does not finish within its coset budget.
class BudgetExceededError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

enum class EnumStrategy {
    hlt,
    felsch,
};

struct EnumOptions {
    // Cap on the number of cosets ever allocated, dead ones included.
    std::size_t budget = 1'000'000;
    EnumStrategy strategy = EnumStrategy::hlt;
};

// Completed coset table: the right action of the group generators on the
// cosets of the enumerated subgroup. Coset 0 is the subgroup itself. Rows
// are renumbered by breadth-first search from coset 0 after enumeration,
// so the same presentation and subgroup always yield an identical table
// regardless of strategy or definition order.
class CosetTable {
public:
    CosetTable() = default;
    CosetTable(int n_generators, std::vector<std::int32_t> entries);

    int n_generators() const { return n_generators_; }
    std::size_t size() const;

    // Image of a coset under a single letter (positive index = generator,
    // negative = its inverse, 1-based as in Word).
    int act(int coset, int letter) const;

    // Image of a coset under a word, applied left to right.
    int act_word(int coset, const Word& w) const;

private:
    int n_generators_ = 0;
    std::vector<std::int32_t> entries_;  // row-major, two columns per generator
};

struct EnumResult {
    EnumStatus status = EnumStatus::budget_exceeded;
    CosetTable table;                  // meaningful only when status == complete
    std::size_t cosets_allocated = 0;  // high-water mark, dead cosets included
};

// Enumerate the cosets of the subgroup generated by `subgroup_generators`
// in the group given by `p`. An empty generator list enumerates the whole
// group (regular representation). Throws std::invalid_argument on malformed
// input (empty budget, letters outside the alphabet).
EnumResult enumerate_cosets(const Presentation& p,
                            const std::vector<Word>& subgroup_generators,
                            const EnumOptions& options = {});

// Order of the group presented by `p`, or nullopt if the enumeration does
// not complete within its budget.
std::optional<long long> group_order(const Presentation& p, const EnumOptions& options = {});

// Order of the element that `w` represents. `table` must be a completed
// table over the trivial subgroup (the regular representation); the order
// is the length of the orbit of coset 0 under repeated application of `w`.
long long element_order(const CosetTable& table, const Word& w);

// Deterministic text dump with cosets numbered from 1.
std::string serialize_table(const CosetTable& table,
                            const std::vector<std::string>& generator_names);

}  // namespace regmap
