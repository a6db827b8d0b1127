#include "multiseg/multisegment.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include <json.hpp>

namespace multiseg {

namespace {
constexpr std::string_view kReserved = "[],+@;";
}

void validate_line(const Line& line) {
    if (line.label.empty())
        throw std::invalid_argument("line label must be nonempty");
    for (char c : line.label) {
        if (std::isspace(static_cast<unsigned char>(c)))
            throw std::invalid_argument("line label must not contain whitespace");
        if (kReserved.find(c) != std::string_view::npos)
            throw std::invalid_argument(std::string("line label must not contain '") + c + "'");
    }
}

Line dual(const Line& line) {
    if (line.label.ends_with('~'))
        return Line{line.label.substr(0, line.label.size() - 1)};
    return Line{line.label + '~'};
}

Segment::Segment(Line l, int begin, int end) : line(std::move(l)), b(begin), e(end) {
    validate_line(line);
    if (b > e) throw std::invalid_argument("empty segment: b > e");
}

bool is_linked(const Segment& s1, const Segment& s2) {
    if (s1.line != s2.line) return false;
    if (s1.b > s2.e + 1 || s2.b > s1.e + 1) return false;  // union not a segment
    Segment u{s1.line, std::min(s1.b, s2.b), std::max(s1.e, s2.e)};
    return u != s1 && u != s2;
}

bool precedes(const Segment& s1, const Segment& s2) {
    return is_linked(s1, s2) && s1.b < s2.b;
}

Multisegment::Multisegment(std::vector<Segment> items) : items_(std::move(items)) {
    std::sort(items_.begin(), items_.end());
}

Multisegment Multisegment::operator+(const Multisegment& other) const {
    std::vector<Segment> all = items_;
    all.insert(all.end(), other.items_.begin(), other.items_.end());
    return Multisegment(std::move(all));
}

long Multisegment::cardinality() const {
    long n = 0;
    for (const auto& s : items_) n += s.length();
    return n;
}

Multisegment Multisegment::shifted(int k) const {
    std::vector<Segment> out;
    out.reserve(items_.size());
    for (const auto& s : items_) out.emplace_back(s.line, s.b + k, s.e + k);
    return Multisegment(std::move(out));
}

Support support(const Multisegment& a) {
    Support sup;
    for (const auto& s : a) {
        auto& pts = sup[s.line.label];
        for (int x = s.b; x <= s.e; ++x) ++pts[x];
    }
    return sup;
}

Multisegment underlying_support(const Multisegment& a) {
    std::vector<Segment> out;
    for (const auto& [label, pts] : support(a)) {
        int run_b = 0, prev = 0;
        bool open = false;
        for (const auto& [x, mult] : pts) {
            (void)mult;
            if (!open) {
                run_b = prev = x;
                open = true;
            } else if (x == prev + 1) {
                prev = x;
            } else {
                out.emplace_back(Line{label}, run_b, prev);
                run_b = prev = x;
            }
        }
        if (open) out.emplace_back(Line{label}, run_b, prev);
    }
    return Multisegment(std::move(out));
}

Multisegment contragredient(const Multisegment& a) {
    std::vector<Segment> out;
    out.reserve(a.size());
    for (const auto& s : a) out.emplace_back(dual(s.line), -s.e, -s.b);
    return Multisegment(std::move(out));
}

namespace {

struct Cursor {
    std::string_view text;
    std::size_t pos = 0;

    void skip_ws() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    }
    bool eof() {
        skip_ws();
        return pos >= text.size();
    }
    char peek() {
        skip_ws();
        return pos < text.size() ? text[pos] : '\0';
    }
    void expect(char c) {
        skip_ws();
        if (pos >= text.size() || text[pos] != c)
            throw ParseError(std::string("expected '") + c + "'", pos);
        ++pos;
    }
    int read_int() {
        skip_ws();
        std::size_t start = pos;
        if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) ++pos;
        std::size_t digits = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        if (pos == digits) throw ParseError("expected integer", start);
        return std::stoi(std::string(text.substr(start, pos - start)));
    }
};

// one chunk of the grammar: term ('+' term)* ['@' label]
void parse_chunk(Cursor& cur, std::vector<Segment>& out) {
    std::vector<std::pair<int, int>> ends;
    for (;;) {
        cur.expect('[');
        int b = cur.read_int();
        cur.expect(',');
        int e = cur.read_int();
        std::size_t close_pos = cur.pos;
        cur.expect(']');
        if (b > e) throw ParseError("empty segment", close_pos);
        ends.emplace_back(b, e);
        if (cur.peek() == '+') {
            cur.expect('+');
            continue;
        }
        break;
    }
    Line line;
    if (cur.peek() == '@') {
        cur.expect('@');
        cur.skip_ws();
        std::size_t start = cur.pos;
        while (cur.pos < cur.text.size()) {
            char c = cur.text[cur.pos];
            if (std::isspace(static_cast<unsigned char>(c)) ||
                kReserved.find(c) != std::string_view::npos)
                break;
            ++cur.pos;
        }
        if (cur.pos == start) throw ParseError("expected line label after '@'", start);
        line.label = std::string(cur.text.substr(start, cur.pos - start));
    }
    validate_line(line);
    for (auto [b, e] : ends) out.emplace_back(line, b, e);
}

}  // namespace

Multisegment parse_multisegment(std::string_view text) {
    Cursor cur{text};
    if (cur.eof()) throw ParseError("empty input", 0);
    std::vector<Segment> segs;
    parse_chunk(cur, segs);
    while (cur.peek() == ';') {
        cur.expect(';');
        parse_chunk(cur, segs);
    }
    if (!cur.eof()) throw ParseError("trailing input", cur.pos);
    return Multisegment(std::move(segs));
}

std::string format_multisegment(const Multisegment& a) {
    std::ostringstream os;
    // canonical order groups segments by line already
    for (std::size_t i = 0; i < a.size(); ++i) {
        const Segment& s = a.items()[i];
        if (i > 0) os << (s.line == a.items()[i - 1].line ? "+" : ";");
        os << '[' << s.b << ',' << s.e << ']';
        bool last_of_line = (i + 1 == a.size()) || a.items()[i + 1].line != s.line;
        if (last_of_line && s.line.label != "rho") os << '@' << s.line.label;
    }
    return os.str();
}

std::string to_json(const Multisegment& a) {
    using nlohmann::json;
    std::map<std::string, json> per_line;
    for (const auto& s : a) {
        auto& obj = per_line[s.line.label];
        if (obj.is_null()) obj = json{{"line", s.line.label}, {"segments", json::array()}};
        obj["segments"].push_back(json::array({s.b, s.e}));
    }
    if (per_line.size() == 1) return per_line.begin()->second.dump();
    json arr = json::array();
    for (auto& [label, obj] : per_line) arr.push_back(std::move(obj));
    return arr.dump();
}

namespace {
Multisegment one_line_from_json(const nlohmann::json& obj, std::vector<Segment>& out) {
    Line line{obj.value("line", "rho")};
    for (const auto& seg : obj.at("segments"))
        out.emplace_back(line, seg.at(0).get<int>(), seg.at(1).get<int>());
    return {};
}
}  // namespace

Multisegment multisegment_from_json(std::string_view json_text) {
    auto j = nlohmann::json::parse(json_text);
    std::vector<Segment> segs;
    if (j.is_array() && (j.empty() || j[0].is_object())) {
        for (const auto& obj : j) one_line_from_json(obj, segs);
    } else {
        one_line_from_json(j, segs);
    }
    return Multisegment(std::move(segs));
}

}  // namespace multiseg
