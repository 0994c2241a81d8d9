#include "ferrers/shape.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace ferrers {

namespace {

std::vector<int> strip_zeros(std::vector<int> parts) {
    parts.erase(std::remove(parts.begin(), parts.end(), 0), parts.end());
    return parts;
}

std::string join(const std::vector<int>& parts) {
    std::ostringstream os;
    for (size_t i = 0; i < parts.size(); ++i) {
        if (i) os << ',';
        os << parts[i];
    }
    return os.str();
}

}  // namespace

StrictShape::StrictShape(std::vector<int> parts) : parts_(strip_zeros(std::move(parts))) {
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] < 1)
            throw std::invalid_argument("strict shape: part " + std::to_string(i + 1) +
                                        " is not positive");
        if (i > 0 && parts_[i] >= parts_[i - 1])
            throw std::invalid_argument("strict shape: parts must strictly decrease (part " +
                                        std::to_string(i + 1) + ")");
    }
}

int StrictShape::total() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

std::string StrictShape::to_string() const { return "<" + join(parts_) + ">"; }

StraightShape::StraightShape(std::vector<int> parts) : parts_(strip_zeros(std::move(parts))) {
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] < 1)
            throw std::invalid_argument("straight shape: part " + std::to_string(i + 1) +
                                        " is not positive");
        if (i > 0 && parts_[i] > parts_[i - 1])
            throw std::invalid_argument("straight shape: parts must be weakly decreasing (part " +
                                        std::to_string(i + 1) + ")");
    }
}

int StraightShape::total() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

std::string StraightShape::to_string() const { return "(" + join(parts_) + ")"; }

ShapeFamily ShapeFamily::truncated_staircase(int n, int b) {
    ShapeFamily f{Kind::truncated_staircase};
    f.n = n;
    f.b = b;
    return f;
}

ShapeFamily ShapeFamily::arithmetic(int n, int t, int b) {
    ShapeFamily f{Kind::arithmetic};
    f.n = n;
    f.t = t;
    f.b = b;
    return f;
}

ShapeFamily ShapeFamily::qanalog(int a, int b) {
    ShapeFamily f{Kind::qanalog};
    f.a = a;
    f.b = b;
    return f;
}

ShapeFamily ShapeFamily::staircase(int b) {
    ShapeFamily f{Kind::staircase};
    f.b = b;
    return f;
}

ShapeFamily ShapeFamily::rectangle(int b, int n) {
    ShapeFamily f{Kind::rectangle};
    f.b = b;
    f.n = n;
    return f;
}

ShapeFamily ShapeFamily::explicit_parts_of(std::vector<int> parts) {
    ShapeFamily f{Kind::explicit_parts};
    f.parts = std::move(parts);
    return f;
}

Shape make_family(const ShapeFamily& family) {
    using Kind = ShapeFamily::Kind;
    switch (family.kind) {
        case Kind::truncated_staircase: {
            if (family.b < 0) throw std::invalid_argument("truncated_staircase: b must be >= 0");
            std::vector<int> parts;
            for (int i = 0; i < family.b; ++i) {
                int part = family.n - i;
                if (part < 1)
                    throw std::invalid_argument("truncated_staircase: part " +
                                                std::to_string(i + 1) + " would be " +
                                                std::to_string(part));
                parts.push_back(part);
            }
            return StrictShape(std::move(parts));
        }
        case Kind::arithmetic: {
            if (family.b < 1) throw std::invalid_argument("arithmetic: b must be >= 1");
            if (family.t < 1) throw std::invalid_argument("arithmetic: t must be >= 1");
            std::vector<int> parts;
            for (int i = 0; i < family.b; ++i) {
                int part = family.n - i * family.t;
                if (part < 1)
                    throw std::invalid_argument("arithmetic: part " + std::to_string(i + 1) +
                                                " would be " + std::to_string(part));
                parts.push_back(part);
            }
            return StrictShape(std::move(parts));
        }
        case Kind::qanalog: {
            if (family.b < 1 || 2 * family.b > family.a)
                throw std::invalid_argument("qanalog: need 1 <= b <= a/2");
            std::vector<int> parts;
            for (int i = 0; i < family.b; ++i) parts.push_back(family.a - (2 * i + 1));
            return StrictShape(std::move(parts));
        }
        case Kind::staircase: {
            if (family.b < 0) throw std::invalid_argument("staircase: b must be >= 0");
            std::vector<int> parts;
            for (int i = family.b; i >= 1; --i) parts.push_back(i);
            return StrictShape(std::move(parts));
        }
        case Kind::rectangle: {
            if (family.b < 0 || (family.b > 0 && family.n < 1))
                throw std::invalid_argument("rectangle: need b >= 0 and n >= 1");
            return StraightShape(std::vector<int>(static_cast<size_t>(family.b), family.n));
        }
        case Kind::explicit_parts:
            return StrictShape(family.parts);
    }
    throw std::logic_error("make_family: unhandled kind");
}

namespace {

void contained_rec(const std::vector<int>& outer, size_t row, int cap, std::vector<int>& cur,
                   const std::function<void(const std::vector<int>&)>& fn) {
    fn(cur);
    if (row == outer.size()) return;
    const int vmax = std::min(outer[row], cap);
    for (int v = vmax; v >= 1; --v) {
        cur.push_back(v);
        contained_rec(outer, row + 1, v - 1, cur, fn);
        cur.pop_back();
    }
}

}  // namespace

void for_each_contained(const StrictShape& outer,
                        const std::function<void(const std::vector<int>&)>& fn) {
    std::vector<int> cur;
    contained_rec(outer.parts(), 0, outer.empty() ? 0 : outer.parts()[0], cur, fn);
}

bool contains(const StrictShape& outer, const StrictShape& mu) {
    if (mu.length() > outer.length()) return false;
    for (int i = 0; i < mu.length(); ++i)
        if (mu.parts()[static_cast<size_t>(i)] > outer.parts()[static_cast<size_t>(i)]) return false;
    return true;
}

std::vector<int> parse_part_list(const std::string& text) {
    std::vector<int> parts;
    std::string token;
    std::istringstream is(text);
    while (std::getline(is, token, ',')) {
        size_t pos = 0;
        int v;
        try {
            v = std::stoi(token, &pos);
        } catch (const std::exception&) {
            throw std::invalid_argument("bad part '" + token + "' in shape '" + text + "'");
        }
        if (pos != token.size())
            throw std::invalid_argument("bad part '" + token + "' in shape '" + text + "'");
        parts.push_back(v);
    }
    if (parts.empty() && !text.empty())
        throw std::invalid_argument("bad shape '" + text + "'");
    return parts;
}

ShapeFamily parse_family(const std::string& text) {
    const size_t colon = text.find(':');
    if (colon == std::string::npos)
        throw std::invalid_argument("family syntax is name:key=value,... got '" + text + "'");
    const std::string name = text.substr(0, colon);

    std::map<std::string, int> kv;
    std::string token;
    std::istringstream is(text.substr(colon + 1));
    while (std::getline(is, token, ',')) {
        const size_t eq = token.find('=');
        if (eq == std::string::npos)
            throw std::invalid_argument("family parameter '" + token + "' is not key=value");
        const std::string key = token.substr(0, eq);
        size_t pos = 0;
        int value;
        try {
            value = std::stoi(token.substr(eq + 1), &pos);
        } catch (const std::exception&) {
            throw std::invalid_argument("family parameter '" + token + "' has a bad value");
        }
        if (pos != token.size() - eq - 1 || !kv.emplace(key, value).second)
            throw std::invalid_argument("family parameter '" + token + "' is malformed");
    }

    auto need = [&](const char* key) {
        auto it = kv.find(key);
        if (it == kv.end())
            throw std::invalid_argument("family '" + name + "' needs parameter " + key);
        int value = it->second;
        kv.erase(it);
        return value;
    };
    auto done = [&] {
        if (!kv.empty())
            throw std::invalid_argument("family '" + name + "' got unknown parameter '" +
                                        kv.begin()->first + "'");
    };

    ShapeFamily f{ShapeFamily::Kind::explicit_parts};
    if (name == "trunc" || name == "truncated_staircase") {
        int n = need("n"), b = need("b");
        done();
        f = ShapeFamily::truncated_staircase(n, b);
    } else if (name == "arith" || name == "arithmetic") {
        int n = need("n"), t = need("t"), b = need("b");
        done();
        f = ShapeFamily::arithmetic(n, t, b);
    } else if (name == "qanalog") {
        int a = need("a"), b = need("b");
        done();
        f = ShapeFamily::qanalog(a, b);
    } else if (name == "staircase") {
        int b = need("b");
        done();
        f = ShapeFamily::staircase(b);
    } else if (name == "rect" || name == "rectangle") {
        int b = need("b"), n = need("n");
        done();
        f = ShapeFamily::rectangle(b, n);
    } else {
        throw std::invalid_argument("unknown shape family '" + name + "'");
    }
    return f;
}

}  // namespace ferrers
