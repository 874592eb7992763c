#include "regmap/coset_enumerator.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace regmap {

namespace {

constexpr std::int32_t kUndef = -1;

// Thrown internally when the coset cap is hit; converted to a status.
struct BudgetSignal {};

// A word rewritten as a sequence of table columns. Column 2*(g-1) is the
// action of generator g, column 2*(g-1)+1 the action of its inverse.
using ColWord = std::vector<int>;

int column_of(int letter, int n_generators) {
    const int g = letter > 0 ? letter : -letter;
    if (g < 1 || g > n_generators) {
        throw std::invalid_argument("word letter outside the generator alphabet");
    }
    return letter > 0 ? 2 * (g - 1) : 2 * (g - 1) + 1;
}

ColWord to_columns(const Word& w, int n_generators) {
    ColWord cols;
    cols.reserve(w.size());
    for (int letter : w) {
        cols.push_back(column_of(letter, n_generators));
    }
    return cols;
}

class Enumerator {
public:
    Enumerator(const Presentation& p,
               const std::vector<Word>& subgroup_generators,
               const EnumOptions& options)
        : n_gens_(static_cast<int>(p.generators.size())),
          n_cols_(2 * static_cast<int>(p.generators.size())),
          budget_(options.budget),
          felsch_(options.strategy == EnumStrategy::felsch) {
        if (n_gens_ == 0) {
            throw std::invalid_argument("presentation has no generators");
        }
        if (budget_ == 0) {
            throw std::invalid_argument("coset budget must be positive");
        }
        for (const Word& r : p.relators) {
            relators_.push_back(to_columns(free_reduce(r), n_gens_));
        }
        for (const Word& g : subgroup_generators) {
            subgroup_words_.push_back(to_columns(free_reduce(g), n_gens_));
        }
        if (felsch_) {
            build_rotation_buckets();
        }
    }

    EnumResult run() {
        EnumResult result;
        try {
            allocate_coset();  // coset 0, the subgroup itself
            for (const ColWord& w : subgroup_words_) {
                if (!w.empty()) {
                    scan_and_fill(rep(0), w);
                }
            }
            if (felsch_) {
                drain_deductions();
                run_felsch();
            } else {
                run_hlt();
            }
        } catch (const BudgetSignal&) {
            result.status = EnumStatus::budget_exceeded;
            result.cosets_allocated = n_rows();
            return result;
        }
        result.status = EnumStatus::complete;
        result.cosets_allocated = n_rows();
        result.table = compact();
        return result;
    }

private:
    int n_gens_;
    int n_cols_;
    std::size_t budget_;
    bool felsch_;

    std::vector<ColWord> relators_;
    std::vector<ColWord> subgroup_words_;
    // Felsch only: cyclic rotations of every relator and its inverse,
    // deduplicated and bucketed by first column.
    std::vector<std::vector<ColWord>> rotation_buckets_;

    std::vector<std::int32_t> tab_;     // n_rows x n_cols, kUndef = empty slot
    std::vector<std::int32_t> parent_;  // union-find, parent_[i] <= i

    std::vector<std::int32_t> coinc_queue_;
    std::vector<std::pair<std::int32_t, int>> deductions_;  // (coset, column)

    std::size_t n_rows() const { return parent_.size(); }

    std::int32_t& tab(int coset, int col) {
        return tab_[static_cast<std::size_t>(coset) * n_cols_ + col];
    }
    std::int32_t tab(int coset, int col) const {
        return tab_[static_cast<std::size_t>(coset) * n_cols_ + col];
    }

    static int inv_col(int col) { return col ^ 1; }

    int rep(int coset) {
        int root = coset;
        while (parent_[root] != root) {
            root = parent_[root];
        }
        while (parent_[coset] != root) {
            int next = parent_[coset];
            parent_[coset] = root;
            coset = next;
        }
        return root;
    }

    bool live(int coset) { return rep(coset) == coset; }

    int allocate_coset() {
        if (n_rows() >= budget_) {
            throw BudgetSignal{};
        }
        const int id = static_cast<int>(n_rows());
        parent_.push_back(id);
        tab_.resize(tab_.size() + n_cols_, kUndef);
        return id;
    }

    void push_deduction(int coset, int col) {
        if (felsch_) {
            deductions_.emplace_back(coset, col);
        }
    }

    // Record the fact coset_a * col = coset_b, with its mirror entry.
    void set_pair(int a, int col, int b) {
        tab(a, col) = b;
        tab(b, inv_col(col)) = a;
        push_deduction(a, col);
        push_deduction(b, inv_col(col));
    }

    int define(int alpha, int col) {
        const int n = allocate_coset();
        set_pair(alpha, col, n);
        return n;
    }

    void merge(int a, int b) {
        a = rep(a);
        b = rep(b);
        if (a == b) {
            return;
        }
        const int lo = std::min(a, b);
        const int hi = std::max(a, b);
        parent_[hi] = lo;
        coinc_queue_.push_back(hi);
    }

    // Queue-based coincidence processing: fold the rows of every coset that
    // dies into its class representative, removing stale back references
    // first so no live row ever points at a dead coset afterwards.
    void coincidence(int a, int b) {
        coinc_queue_.clear();
        merge(a, b);
        std::size_t head = 0;
        while (head < coinc_queue_.size()) {
            const int gamma = coinc_queue_[head++];
            for (int col = 0; col < n_cols_; ++col) {
                const int delta = tab(gamma, col);
                if (delta == kUndef) {
                    continue;
                }
                if (tab(delta, inv_col(col)) == gamma) {
                    tab(delta, inv_col(col)) = kUndef;
                }
                const int mu = rep(gamma);
                const int nu = rep(delta);
                if (tab(mu, col) != kUndef) {
                    merge(nu, tab(mu, col));
                } else if (tab(nu, inv_col(col)) != kUndef) {
                    merge(mu, tab(nu, inv_col(col)));
                } else {
                    set_pair(mu, col, nu);
                }
            }
        }
    }

    // Trace `w` around `alpha`, defining new cosets to bridge any gap wider
    // than one slot. Ends in a no-op, a deduction, or a coincidence.
    void scan_and_fill(int alpha, const ColWord& w) {
        int f = alpha;
        int b = alpha;
        int i = 0;
        int j = static_cast<int>(w.size()) - 1;
        while (true) {
            while (i <= j && tab(f, w[i]) != kUndef) {
                f = tab(f, w[i]);
                ++i;
            }
            if (i > j) {
                if (f != b) {
                    coincidence(f, b);
                }
                return;
            }
            while (j >= i && tab(b, inv_col(w[j])) != kUndef) {
                b = tab(b, inv_col(w[j]));
                --j;
            }
            if (j < i) {
                coincidence(f, b);
                return;
            }
            if (j == i) {
                set_pair(f, w[i], b);
                return;
            }
            define(f, w[i]);
        }
    }

    // Trace without filling: used by the deduction-driven strategy, where a
    // gap wider than one slot is simply left for later.
    void scan(int alpha, const ColWord& w) {
        int f = alpha;
        int b = alpha;
        int i = 0;
        int j = static_cast<int>(w.size()) - 1;
        while (i <= j && tab(f, w[i]) != kUndef) {
            f = tab(f, w[i]);
            ++i;
        }
        if (i > j) {
            if (f != b) {
                coincidence(f, b);
            }
            return;
        }
        while (j >= i && tab(b, inv_col(w[j])) != kUndef) {
            b = tab(b, inv_col(w[j]));
            --j;
        }
        if (j < i) {
            coincidence(f, b);
        } else if (j == i) {
            set_pair(f, w[i], b);
        }
    }

    void run_hlt() {
        for (int alpha = 0; alpha < static_cast<int>(n_rows()); ++alpha) {
            if (!live(alpha)) {
                continue;
            }
            for (const ColWord& r : relators_) {
                scan_and_fill(alpha, r);
                if (!live(alpha)) {
                    break;
                }
            }
            if (!live(alpha)) {
                continue;
            }
            for (int col = 0; col < n_cols_; ++col) {
                if (tab(alpha, col) == kUndef) {
                    define(alpha, col);
                }
            }
        }
    }

    void build_rotation_buckets() {
        rotation_buckets_.assign(n_cols_, {});
        std::vector<std::set<ColWord>> seen(n_cols_);
        auto add_rotations = [&](const ColWord& w) {
            for (std::size_t s = 0; s < w.size(); ++s) {
                ColWord rot;
                rot.reserve(w.size());
                for (std::size_t k = 0; k < w.size(); ++k) {
                    rot.push_back(w[(s + k) % w.size()]);
                }
                if (seen[rot[0]].insert(rot).second) {
                    rotation_buckets_[rot[0]].push_back(rot);
                }
            }
        };
        for (const ColWord& r : relators_) {
            if (r.empty()) {
                continue;
            }
            add_rotations(r);
            ColWord inv(r.rbegin(), r.rend());
            for (int& c : inv) {
                c = inv_col(c);
            }
            add_rotations(inv);
        }
    }

    void drain_deductions() {
        while (!deductions_.empty()) {
            const auto [alpha, col] = deductions_.back();
            deductions_.pop_back();
            if (!live(alpha) || tab(alpha, col) == kUndef) {
                continue;  // stale: the row merged away or the entry moved
            }
            for (const ColWord& w : rotation_buckets_[col]) {
                scan(alpha, w);
                if (!live(alpha) || tab(alpha, col) == kUndef) {
                    break;
                }
            }
        }
    }

    void run_felsch() {
        int hint = 0;
        while (true) {
            int pos = find_undefined(hint);
            if (pos < 0) {
                pos = find_undefined(0);  // full rescan confirms completeness
                if (pos < 0) {
                    return;
                }
            }
            const int alpha = pos / n_cols_;
            const int col = pos % n_cols_;
            define(alpha, col);
            drain_deductions();
            hint = pos;
        }
    }

    // First undefined slot in a live row at or after `from` (a flat
    // row-major position), or -1 if there is none.
    int find_undefined(int from) {
        for (std::size_t pos = static_cast<std::size_t>(from); pos < tab_.size(); ++pos) {
            if (tab_[pos] == kUndef && live(static_cast<int>(pos / n_cols_))) {
                return static_cast<int>(pos);
            }
        }
        return -1;
    }

    // Renumber the live cosets by breadth-first search from the class of
    // coset 0, giving a canonical table independent of enumeration history.
    CosetTable compact() {
        const std::int32_t unmapped = -1;
        std::vector<std::int32_t> new_id(n_rows(), unmapped);
        std::vector<std::int32_t> bfs_order;
        bfs_order.reserve(n_rows());

        const int start = rep(0);
        new_id[start] = 0;
        bfs_order.push_back(start);
        for (std::size_t head = 0; head < bfs_order.size(); ++head) {
            const int coset = bfs_order[head];
            for (int col = 0; col < n_cols_; ++col) {
                const int image = tab(coset, col);
                if (image == kUndef) {
                    throw std::logic_error("incomplete row in a completed coset table");
                }
                const int target = rep(image);
                if (new_id[target] == unmapped) {
                    new_id[target] = static_cast<std::int32_t>(bfs_order.size());
                    bfs_order.push_back(target);
                }
            }
        }
        for (std::size_t i = 0; i < n_rows(); ++i) {
            if (live(static_cast<int>(i)) && new_id[i] == unmapped) {
                throw std::logic_error("coset table is not transitive");
            }
        }

        std::vector<std::int32_t> entries(bfs_order.size() * n_cols_);
        for (std::size_t row = 0; row < bfs_order.size(); ++row) {
            for (int col = 0; col < n_cols_; ++col) {
                entries[row * n_cols_ + col] = new_id[rep(tab(bfs_order[row], col))];
            }
        }
        return CosetTable(n_gens_, std::move(entries));
    }
};

// Post-enumeration sanity pass: the inverse columns really invert, every
// relator closes around every coset, and the subgroup generators fix
// coset 0. Catches table corruption independently of the strategy used.
void validate_table(const CosetTable& table,
                    const Presentation& p,
                    const std::vector<Word>& subgroup_generators) {
    const int n = static_cast<int>(table.size());
    for (int coset = 0; coset < n; ++coset) {
        for (int g = 1; g <= table.n_generators(); ++g) {
            if (table.act(table.act(coset, g), -g) != coset ||
                table.act(table.act(coset, -g), g) != coset) {
                throw std::logic_error("coset table columns are not mutually inverse");
            }
        }
        for (const Word& r : p.relators) {
            if (table.act_word(coset, r) != coset) {
                throw std::logic_error("relator does not close around a coset");
            }
        }
    }
    for (const Word& g : subgroup_generators) {
        if (table.act_word(0, g) != 0) {
            throw std::logic_error("subgroup generator moves coset 0");
        }
    }
}

}  // namespace

CosetTable::CosetTable(int n_generators, std::vector<std::int32_t> entries)
    : n_generators_(n_generators), entries_(std::move(entries)) {
    if (n_generators_ <= 0) {
        throw std::invalid_argument("coset table needs at least one generator");
    }
    if (entries_.size() % (2 * static_cast<std::size_t>(n_generators_)) != 0) {
        throw std::invalid_argument("coset table entries do not form whole rows");
    }
}

std::size_t CosetTable::size() const {
    return n_generators_ == 0 ? 0 : entries_.size() / (2 * static_cast<std::size_t>(n_generators_));
}

int CosetTable::act(int coset, int letter) const {
    if (coset < 0 || static_cast<std::size_t>(coset) >= size()) {
        throw std::out_of_range("coset index out of range");
    }
    const int col = column_of(letter, n_generators_);
    return entries_[static_cast<std::size_t>(coset) * 2 * n_generators_ + col];
}

int CosetTable::act_word(int coset, const Word& w) const {
    for (int letter : w) {
        coset = act(coset, letter);
    }
    return coset;
}

EnumResult enumerate_cosets(const Presentation& p,
                            const std::vector<Word>& subgroup_generators,
                            const EnumOptions& options) {
    Enumerator enumerator(p, subgroup_generators, options);
    EnumResult result = enumerator.run();
    if (result.status == EnumStatus::complete) {
        validate_table(result.table, p, subgroup_generators);
    }
    return result;
}

std::optional<long long> group_order(const Presentation& p, const EnumOptions& options) {
    const EnumResult result = enumerate_cosets(p, {}, options);
    if (result.status != EnumStatus::complete) {
        return std::nullopt;
    }
    return static_cast<long long>(result.table.size());
}

long long element_order(const CosetTable& table, const Word& w) {
    long long order = 0;
    int coset = 0;
    do {
        coset = table.act_word(coset, w);
        ++order;
        if (order > static_cast<long long>(table.size())) {
            throw std::logic_error("element orbit exceeds the table size");
        }
    } while (coset != 0);
    return order;
}

std::string serialize_table(const CosetTable& table,
                            const std::vector<std::string>& generator_names) {
    if (static_cast<int>(generator_names.size()) != table.n_generators()) {
        throw std::invalid_argument("generator name count does not match the table");
    }
    std::ostringstream out;
    out << "cosets " << table.size() << "\ncolumns";
    for (const std::string& name : generator_names) {
        out << ' ' << name << ' ' << name << '\'';
    }
    out << '\n';
    for (std::size_t coset = 0; coset < table.size(); ++coset) {
        out << (coset + 1) << ':';
        for (int g = 1; g <= table.n_generators(); ++g) {
            out << ' ' << (table.act(static_cast<int>(coset), g) + 1)
                << ' ' << (table.act(static_cast<int>(coset), -g) + 1);
        }
        out << '\n';
    }
    return out.str();
}

}  // namespace regmap
