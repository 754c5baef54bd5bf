#include "ppmine/regex.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <sstream>

#include "ppmine/error.hpp"

namespace ppmine {

namespace {

bool is_operator(char c) {
    return c == '.' || c == '|' || c == '*' || c == '+' || c == '?' || c == '(' || c == ')';
}

bool is_space(char c) { return c == ' ' || c == '\t' || c == '\n' || c == '\r'; }

struct Token {
    std::string text;
    std::size_t position;
};

std::vector<Token> tokenize(std::string_view expr) {
    std::vector<Token> tokens;
    std::size_t k = 0;
    while (k < expr.size()) {
        if (is_space(expr[k])) {
            ++k;
        } else if (is_operator(expr[k])) {
            tokens.push_back({std::string(1, expr[k]), k});
            ++k;
        } else {
            const std::size_t begin = k;
            while (k < expr.size() && !is_space(expr[k]) && !is_operator(expr[k])) ++k;
            tokens.push_back({std::string(expr.substr(begin, k - begin)), begin});
        }
    }
    return tokens;
}

class Parser {
public:
    Parser(std::string_view expr, const ItemDictionary& dict)
        : tokens_(tokenize(expr)), end_(expr.size()), dict_(dict) {}

    RegexAst parse() {
        ast_.num_items = dict_.size();
        if (tokens_.empty()) throw RegexSyntaxError("empty expression", 0);
        ast_.root = alternation();
        if (pos_ != tokens_.size()) {
            throw RegexSyntaxError("unexpected '" + tokens_[pos_].text + "'", tokens_[pos_].position);
        }
        return std::move(ast_);
    }

private:
    bool at(std::string_view t) const { return pos_ < tokens_.size() && tokens_[pos_].text == t; }
    std::size_t position() const { return pos_ < tokens_.size() ? tokens_[pos_].position : end_; }

    std::size_t add(RegexNode node) {
        ast_.nodes.push_back(std::move(node));
        return ast_.nodes.size() - 1;
    }

    std::size_t alternation() {
        std::vector<std::size_t> branches{concatenation()};
        while (at("|")) {
            ++pos_;
            branches.push_back(concatenation());
        }
        if (branches.size() == 1) return branches.front();
        return add({RegexNode::Kind::alternation, 0, std::move(branches)});
    }

    bool starts_atom() const {
        if (pos_ >= tokens_.size()) return false;
        const auto& t = tokens_[pos_].text;
        return t == "(" || t == "." || !is_operator(t[0]);
    }

    std::size_t concatenation() {
        if (!starts_atom()) {
            throw RegexSyntaxError(pos_ < tokens_.size() ? "unexpected '" + tokens_[pos_].text + "'"
                                                         : "unexpected end of expression",
                                   position());
        }
        std::vector<std::size_t> parts;
        while (starts_atom()) parts.push_back(postfix());
        if (parts.size() == 1) return parts.front();
        return add({RegexNode::Kind::concat, 0, std::move(parts)});
    }

    std::size_t postfix() {
        std::size_t node = atom();
        while (at("*") || at("+") || at("?")) {
            const char op = tokens_[pos_++].text[0];
            const auto kind = op == '*'   ? RegexNode::Kind::star
                              : op == '+' ? RegexNode::Kind::plus
                                          : RegexNode::Kind::optional;
            node = add({kind, 0, {node}});
        }
        return node;
    }

    std::size_t atom() {
        const Token& t = tokens_[pos_];
        if (t.text == "(") {
            ++pos_;
            const std::size_t inner = alternation();
            if (!at(")")) throw RegexSyntaxError("expected ')'", position());
            ++pos_;
            return inner;
        }
        ++pos_;
        if (t.text == ".") return add({RegexNode::Kind::any, 0, {}});
        return add({RegexNode::Kind::literal, dict_.lookup(t.text), {}});
    }

    std::vector<Token> tokens_;
    std::size_t end_;
    const ItemDictionary& dict_;
    std::size_t pos_ = 0;
    RegexAst ast_;
};

void render(const RegexAst& ast, std::size_t id, const ItemDictionary& dict, std::string& out) {
    const auto& n = ast.nodes[id];
    switch (n.kind) {
    case RegexNode::Kind::literal:
        out += dict.name(n.item);
        break;
    case RegexNode::Kind::any:
        out += '.';
        break;
    case RegexNode::Kind::concat:
    case RegexNode::Kind::alternation:
        out += "( ";
        for (std::size_t k = 0; k < n.children.size(); ++k) {
            if (k) out += n.kind == RegexNode::Kind::concat ? " " : " | ";
            render(ast, n.children[k], dict, out);
        }
        out += " )";
        break;
    case RegexNode::Kind::star:
    case RegexNode::Kind::plus:
    case RegexNode::Kind::optional:
        out += "( ";
        render(ast, n.children[0], dict, out);
        out += " )";
        out += n.kind == RegexNode::Kind::star ? "*" : n.kind == RegexNode::Kind::plus ? "+" : "?";
        break;
    }
}

struct Fragment {
    std::uint32_t start;
    std::uint32_t end;
};

class NfaBuilder {
public:
    explicit NfaBuilder(const RegexAst& ast) : ast_(ast) { nfa_.num_items = ast.num_items; }

    Nfa build() {
        const Fragment f = fragment(ast_.root);
        nfa_.start = f.start;
        nfa_.accept = f.end;
        return std::move(nfa_);
    }

private:
    std::uint32_t state() {
        nfa_.states.emplace_back();
        return static_cast<std::uint32_t>(nfa_.states.size() - 1);
    }
    void eps(std::uint32_t from, std::uint32_t to) { nfa_.states[from].epsilon.push_back(to); }

    Fragment fragment(std::size_t id) {
        const auto& n = ast_.nodes[id];
        switch (n.kind) {
        case RegexNode::Kind::literal:
        case RegexNode::Kind::any: {
            const auto s = state();
            const auto e = state();
            nfa_.states[s].label = n.kind == RegexNode::Kind::any ? Nfa::kAnyItem : static_cast<std::int32_t>(n.item);
            nfa_.states[s].next = e;
            return {s, e};
        }
        case RegexNode::Kind::concat: {
            Fragment whole = fragment(n.children[0]);
            for (std::size_t k = 1; k < n.children.size(); ++k) {
                const Fragment f = fragment(n.children[k]);
                eps(whole.end, f.start);
                whole.end = f.end;
            }
            return whole;
        }
        case RegexNode::Kind::alternation: {
            const auto s = state();
            const auto e = state();
            for (auto child : n.children) {
                const Fragment f = fragment(child);
                eps(s, f.start);
                eps(f.end, e);
            }
            return {s, e};
        }
        case RegexNode::Kind::star:
        case RegexNode::Kind::plus:
        case RegexNode::Kind::optional: {
            const Fragment f = fragment(n.children[0]);
            const auto s = state();
            const auto e = state();
            eps(s, f.start);
            eps(f.end, e);
            if (n.kind != RegexNode::Kind::plus) eps(s, e);
            if (n.kind != RegexNode::Kind::optional) eps(f.end, f.start);
            return {s, e};
        }
        }
        return {0, 0};
    }

    const RegexAst& ast_;
    Nfa nfa_;
};

} // namespace

std::string RegexAst::to_string(const ItemDictionary& dict) const {
    std::string out;
    render(*this, root, dict, out);
    return out;
}

RegexAst parse_regex(std::string_view expr, const ItemDictionary& dict) { return Parser(expr, dict).parse(); }

Nfa build_nfa(const RegexAst& ast) { return NfaBuilder(ast).build(); }

std::vector<std::uint32_t> Nfa::closure(std::vector<std::uint32_t> set) const {
    std::vector<char> in(states.size(), 0);
    std::vector<std::uint32_t> stack;
    for (auto q : set) {
        if (!in[q]) {
            in[q] = 1;
            stack.push_back(q);
        }
    }
    while (!stack.empty()) {
        const auto q = stack.back();
        stack.pop_back();
        for (auto t : states[q].epsilon) {
            if (!in[t]) {
                in[t] = 1;
                stack.push_back(t);
            }
        }
    }
    std::vector<std::uint32_t> out;
    for (std::uint32_t q = 0; q < states.size(); ++q) {
        if (in[q]) out.push_back(q);
    }
    return out;
}

bool Nfa::accepts(std::span<const ItemId> word) const {
    auto current = closure({start});
    for (ItemId a : word) {
        std::vector<std::uint32_t> moved;
        for (auto q : current) {
            const auto& s = states[q];
            if (s.label == kAnyItem || (s.label >= 0 && static_cast<ItemId>(s.label) == a)) moved.push_back(s.next);
        }
        if (moved.empty()) return false;
        current = closure(std::move(moved));
    }
    return std::binary_search(current.begin(), current.end(), accept);
}

Dfa::Dfa(std::size_t num_symbols, std::uint32_t start, std::vector<std::uint32_t> table,
         std::vector<char> accepting_states)
    : num_symbols_(num_symbols), start_(start), table_(std::move(table)), accepting_(std::move(accepting_states)) {
    assert(table_.size() == accepting_.size() * num_symbols_);
    for (std::uint32_t q = 0; q < num_states(); ++q) {
        if (accepting(q)) continue;
        bool loops = true;
        for (Value a = 0; a < num_symbols_ && loops; ++a) loops = next(q, a) == q;
        if (loops) {
            dead_ = q;
            break;
        }
    }
}

std::vector<char> Dfa::doomed() const {
    // Backward reachability from accepting states.
    const std::size_t n = num_states();
    std::vector<std::vector<std::uint32_t>> reverse(n);
    for (std::uint32_t q = 0; q < n; ++q) {
        for (Value a = 0; a < num_symbols_; ++a) reverse[next(q, a)].push_back(q);
    }
    std::vector<char> alive(n, 0);
    std::vector<std::uint32_t> stack;
    for (std::uint32_t q = 0; q < n; ++q) {
        if (accepting(q)) {
            alive[q] = 1;
            stack.push_back(q);
        }
    }
    while (!stack.empty()) {
        const auto q = stack.back();
        stack.pop_back();
        for (auto p : reverse[q]) {
            if (!alive[p]) {
                alive[p] = 1;
                stack.push_back(p);
            }
        }
    }
    std::vector<char> out(n);
    for (std::size_t q = 0; q < n; ++q) out[q] = !alive[q];
    return out;
}

bool Dfa::accepts(std::span<const Value> word) const {
    std::uint32_t q = start_;
    for (Value a : word) {
        if (a >= num_symbols_) return false;
        q = next(q, a);
    }
    return accepting(q);
}

std::string Dfa::dump(const ItemDictionary& dict) const {
    std::ostringstream out;
    out << "start q" << start_ << '\n';
    out << "accept";
    for (std::uint32_t q = 0; q < num_states(); ++q) {
        if (accepting(q)) out << " q" << q;
    }
    out << '\n';
    for (std::uint32_t q = 0; q < num_states(); ++q) {
        for (Value a = 0; a < num_symbols_; ++a) {
            out << 'q' << q << ' ' << (a < dict.size() ? dict.name(a) : std::string("<end>")) << " -> q"
                << next(q, a) << '\n';
        }
    }
    return out.str();
}

Dfa determinize(const Nfa& nfa) {
    const std::size_t d = nfa.num_items;

    // Items named by a literal get their own column; every other item only
    // follows wildcard edges and therefore behaves identically.
    std::vector<char> literal(d, 0);
    for (const auto& s : nfa.states) {
        if (s.label >= 0) literal[static_cast<std::size_t>(s.label)] = 1;
    }
    std::vector<ItemId> named;
    for (ItemId a = 0; a < d; ++a) {
        if (literal[a]) named.push_back(a);
    }
    const bool has_other = named.size() < d;

    std::map<std::vector<std::uint32_t>, std::uint32_t> ids;
    std::vector<std::vector<std::uint32_t>> sets;
    auto intern = [&](std::vector<std::uint32_t> set) {
        auto [it, inserted] = ids.emplace(set, static_cast<std::uint32_t>(sets.size()));
        if (inserted) sets.push_back(std::move(set));
        return it->second;
    };
    auto move = [&](const std::vector<std::uint32_t>& set, std::int32_t symbol) {
        std::vector<std::uint32_t> moved;
        for (auto q : set) {
            const auto& s = nfa.states[q];
            if (s.label == Nfa::kAnyItem || (symbol >= 0 && s.label == symbol)) moved.push_back(s.next);
        }
        return nfa.closure(std::move(moved));
    };

    intern(nfa.closure({nfa.start}));
    std::vector<std::uint32_t> table;
    for (std::size_t k = 0; k < sets.size(); ++k) {
        std::vector<std::uint32_t> row(d, 0);
        if (has_other) {
            const auto other = intern(move(sets[k], Nfa::kEpsilonOnly));
            std::fill(row.begin(), row.end(), other);
        }
        for (ItemId a : named) row[a] = intern(move(sets[k], static_cast<std::int32_t>(a)));
        table.insert(table.end(), row.begin(), row.end());
    }

    std::vector<char> accepting(sets.size());
    for (std::size_t k = 0; k < sets.size(); ++k) {
        accepting[k] = std::binary_search(sets[k].begin(), sets[k].end(), nfa.accept);
    }
    return Dfa(d, 0, std::move(table), std::move(accepting));
}

Dfa canonical(const Dfa& dfa) {
    const std::size_t n = dfa.num_states();
    const std::size_t s = dfa.num_symbols();
    std::vector<std::uint32_t> order(n, Dfa::kNoState);
    std::vector<std::uint32_t> queue{dfa.start()};
    order[dfa.start()] = 0;
    for (std::size_t head = 0; head < queue.size(); ++head) {
        for (Value a = 0; a < s; ++a) {
            const auto t = dfa.next(queue[head], a);
            if (order[t] == Dfa::kNoState) {
                order[t] = static_cast<std::uint32_t>(queue.size());
                queue.push_back(t);
            }
        }
    }
    std::vector<std::uint32_t> table(queue.size() * s);
    std::vector<char> accepting(queue.size());
    for (std::size_t k = 0; k < queue.size(); ++k) {
        accepting[k] = dfa.accepting(queue[k]);
        for (Value a = 0; a < s; ++a) table[k * s + a] = order[dfa.next(queue[k], a)];
    }
    return Dfa(s, 0, std::move(table), std::move(accepting));
}

Dfa minimize(const Dfa& dfa) {
    const std::size_t n = dfa.num_states();
    const std::size_t s = dfa.num_symbols();
    std::vector<std::uint32_t> cls(n);
    for (std::uint32_t q = 0; q < n; ++q) cls[q] = dfa.accepting(q) ? 1 : 0;

    std::size_t num_classes = 0;
    for (;;) {
        std::map<std::vector<std::uint32_t>, std::uint32_t> signatures;
        std::vector<std::uint32_t> next_cls(n);
        for (std::uint32_t q = 0; q < n; ++q) {
            std::vector<std::uint32_t> sig;
            sig.reserve(s + 1);
            sig.push_back(cls[q]);
            for (Value a = 0; a < s; ++a) sig.push_back(cls[dfa.next(q, a)]);
            auto [it, inserted] = signatures.emplace(std::move(sig), static_cast<std::uint32_t>(signatures.size()));
            next_cls[q] = it->second;
        }
        cls = std::move(next_cls);
        if (signatures.size() == num_classes) break;
        num_classes = signatures.size();
    }

    std::vector<std::uint32_t> table(num_classes * s);
    std::vector<char> accepting(num_classes);
    for (std::uint32_t q = 0; q < n; ++q) {
        accepting[cls[q]] = dfa.accepting(q);
        for (Value a = 0; a < s; ++a) table[cls[q] * s + a] = cls[dfa.next(q, a)];
    }
    return canonical(Dfa(s, cls[dfa.start()], std::move(table), std::move(accepting)));
}

Dfa augment_end_marker(const Dfa& dfa) {
    const std::size_t items = dfa.num_symbols();
    const std::size_t s = items + 1;
    std::size_t n = dfa.num_states();
    std::uint32_t dead = dfa.dead();
    if (dead == Dfa::kNoState) dead = static_cast<std::uint32_t>(n++);
    const auto sink = static_cast<std::uint32_t>(n++);
    const auto end = static_cast<Value>(items);

    std::vector<std::uint32_t> table(n * s, dead);
    std::vector<char> accepting(n, 0);
    for (std::uint32_t q = 0; q < dfa.num_states(); ++q) {
        for (Value a = 0; a < items; ++a) table[q * s + a] = dfa.next(q, a);
        table[q * s + end] = dfa.accepting(q) ? sink : dead;
        accepting[q] = dfa.accepting(q);
    }
    table[sink * s + end] = sink;
    accepting[sink] = 1;
    return Dfa(s, dfa.start(), std::move(table), std::move(accepting));
}

Dfa compile_regex(std::string_view expr, const ItemDictionary& dict) {
    const RegexAst ast = parse_regex(expr, dict);
    return canonical(augment_end_marker(minimize(determinize(build_nfa(ast)))));
}

} // namespace ppmine
