#pragma once

#include <compare>
#include <string>
#include <utility>
#include <vector>

namespace dfv {

/**
 * Partitions, standard Young tableaux, Robinson-Schensted insertion,
 * plactic products, the Schutzenberger involution and signed Young
 * diagrams.  Entries of tableaux are arbitrary integers (negative labels
 * occur in the exotic two-line arrays); the order is integer order.
 * All values are immutable after construction and every operation is pure.
 */

// Weakly decreasing list of positive parts; the empty list is the empty
// partition.
using Partition = std::vector<int>;

bool is_partition(const Partition& p);
int partition_size(const Partition& p);
Partition conjugate(const Partition& p);
// inner contained in outer as Young diagrams
bool partition_contains(const Partition& outer, const Partition& inner);
// inner contained in outer with at most one box of outer\inner per row
bool column_strip_leq(const Partition& inner, const Partition& outer);
// number of boxes of lam in columns 1..c
int boxes_in_first_columns(const Partition& lam, int c);
// dominance order (prefix sums of a >= prefix sums of b); requires |a| = |b|
bool dominates(const Partition& a, const Partition& b);
std::string partition_to_string(const Partition& p);
Partition partition_from_string(const std::string& s);
std::vector<Partition> partitions_of(int n);
// all sub-partitions inner of outer with outer\inner a column strip
std::vector<Partition> column_strip_subdiagrams(const Partition& outer);

struct StandardTableau {
    std::vector<std::vector<int>> rows;

    bool operator==(const StandardTableau&) const = default;
    auto operator<=>(const StandardTableau&) const = default;
    bool empty() const { return rows.empty(); }
};

bool is_standard(const StandardTableau& t);
Partition shape(const StandardTableau& t);
std::vector<int> tableau_entries(const StandardTableau& t);  // sorted
// bottom-to-top, each row left-to-right
std::vector<int> reading_word(const StandardTableau& t);
// single-column tableau from (sorted ascending) distinct entries
StandardTableau column_tableau(std::vector<int> entries);
StandardTableau transpose(const StandardTableau& t);
// all standard tableaux of the given shape with entries 1..n
std::vector<StandardTableau> standard_tableaux(const Partition& sh);

StandardTableau row_insert(const StandardTableau& t, int a);
// Undo the row insertion whose new box is the last box of row `row`
// (which must be an outer corner); returns the smaller tableau and the
// entry that had been inserted.
std::pair<StandardTableau, int> inverse_row_insert(const StandardTableau& t, int row);

// Bijection from a sorted finite domain onto a set of distinct values.
struct PartialBijection {
    std::vector<int> domain;
    std::vector<int> values;

    bool operator==(const PartialBijection&) const = default;
};

bool is_valid(const PartialBijection& s);
PartialBijection inverse(const PartialBijection& s);
StandardTableau rs1(const PartialBijection& s);
StandardTableau rs2(const PartialBijection& s);
std::pair<StandardTableau, StandardTableau> rs(const PartialBijection& s);
// inverse of sigma -> (rs1, rs2)
PartialBijection rs_inverse(const StandardTableau& p, const StandardTableau& q);

StandardTableau plactic_product(const StandardTableau& t, const StandardTableau& u);
// evacuation; entries must be exactly 1..n
StandardTableau schutzenberger(const StandardTableau& t);

struct SignedRow {
    int len = 0;    // positive
    char sign = '+';  // leading sign, '+' or '-'

    bool operator==(const SignedRow&) const = default;
};

// Rows sorted by length descending, '+' rows before '-' rows of equal
// length (the standardization order).
struct SignedYoungDiagram {
    std::vector<SignedRow> rows;

    bool operator==(const SignedYoungDiagram&) const = default;
};

bool operator<(const SignedYoungDiagram& a, const SignedYoungDiagram& b);
SignedYoungDiagram make_signed_diagram(std::vector<SignedRow> rows);
// (number of + boxes, number of - boxes)
std::pair<int, int> signed_signature(const SignedYoungDiagram& d);
Partition signed_shape(const SignedYoungDiagram& d);
// cumulative counts of +/- boxes in the first c columns, c = 1..max_len
std::pair<std::vector<int>, std::vector<int>> signed_column_counts(const SignedYoungDiagram& d);
// reconstruct the unique diagram with the given cumulative counts
SignedYoungDiagram signed_diagram_from_column_counts(std::vector<int> nplus,
                                                     std::vector<int> nminus);
// a's orbit is at least as big as b's: every cumulative count of a is <=
// the corresponding count of b (smaller kernels = bigger orbit)
bool signed_dominates(const SignedYoungDiagram& a, const SignedYoungDiagram& b);
std::vector<SignedYoungDiagram> signed_diagrams(int p, int q);
std::string signed_diagram_to_string(const SignedYoungDiagram& d);

}  // namespace dfv
