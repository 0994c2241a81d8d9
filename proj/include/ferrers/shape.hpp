#pragma once

#include <functional>
#include <string>
#include <variant>
#include <vector>

namespace ferrers {

/// Partition with distinct parts, <lambda_1 > lambda_2 > ... >= 1>, viewed as
/// a shifted Ferrers shape. Zero parts are stripped on construction; the
/// empty shape is legal (its rank-generating function is 1).
class StrictShape {
public:
    StrictShape() = default;
    /// Throws std::invalid_argument unless parts are strictly decreasing
    /// positive integers after stripping zeros.
    explicit StrictShape(std::vector<int> parts);

    const std::vector<int>& parts() const { return parts_; }
    int length() const { return static_cast<int>(parts_.size()); }
    bool empty() const { return parts_.empty(); }
    int total() const;  // sum of parts

    bool operator==(const StrictShape&) const = default;

    std::string to_string() const;  // "<9,7,5,3>"

private:
    std::vector<int> parts_;
};

/// Ordinary partition (weakly decreasing positive parts), a straight shape.
class StraightShape {
public:
    StraightShape() = default;
    explicit StraightShape(std::vector<int> parts);

    const std::vector<int>& parts() const { return parts_; }
    int length() const { return static_cast<int>(parts_.size()); }
    bool empty() const { return parts_.empty(); }
    int total() const;

    bool operator==(const StraightShape&) const = default;

    std::string to_string() const;  // "(8,8,4,4)"

private:
    std::vector<int> parts_;
};

using Shape = std::variant<StrictShape, StraightShape>;

/// Constructors for the named shape families.
struct ShapeFamily {
    enum class Kind {
        truncated_staircase,  // <n, n-1, ..., n-b+1>
        arithmetic,           // <n, n-t, ..., n-(b-1)t>
        qanalog,              // <a-1, a-3, ..., a-(2b-1)>
        staircase,            // <b, b-1, ..., 1>
        rectangle,            // (n, ..., n), b rows
        explicit_parts,       // as given
    };

    explicit ShapeFamily(Kind k) : kind(k) {}

    Kind kind;
    int n = 0, t = 0, b = 0, a = 0;
    std::vector<int> parts;  // explicit_parts only

    static ShapeFamily truncated_staircase(int n, int b);
    static ShapeFamily arithmetic(int n, int t, int b);
    static ShapeFamily qanalog(int a, int b);
    static ShapeFamily staircase(int b);
    static ShapeFamily rectangle(int b, int n);
    static ShapeFamily explicit_parts_of(std::vector<int> parts);
};

/// Expand a family to its part list. Parameter violations throw
/// std::invalid_argument naming the offending part index.
/// explicit_parts expands to a StrictShape; parse the list directly for a
/// straight reading.
Shape make_family(const ShapeFamily& family);

/// true iff mu fits inside outer: len(mu) <= len(outer) and mu_i <= outer_i.
bool contains(const StrictShape& outer, const StrictShape& mu);

/// Visit the part list of every strict partition contained in outer
/// (including the empty one), each exactly once, in a deterministic
/// largest-first depth-first order.
void for_each_contained(const StrictShape& outer,
                        const std::function<void(const std::vector<int>&)>& fn);

/// Parse "9,7,5,3" into a raw part list (zeros stripped later by the shape
/// constructors). Throws std::invalid_argument on junk.
std::vector<int> parse_part_list(const std::string& text);

/// Parse family syntax "arith:n=19,t=2,b=4" (aliases: trunc/truncated_staircase,
/// arith/arithmetic, rect/rectangle, staircase, qanalog).
ShapeFamily parse_family(const std::string& text);

}  // namespace ferrers
