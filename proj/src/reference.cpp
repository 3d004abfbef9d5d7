#include "ppa/reference.hpp"

#include <functional>
#include <sstream>

namespace ppa {

namespace {

std::map<int, long> parse_middle(const std::string& s) {
    std::map<int, long> out;
    std::stringstream in(s);
    std::string item;
    while (std::getline(in, item, ',')) {
        auto hat = item.find('^');
        int v = std::stoi(item.substr(0, hat));
        out[v] += hat == std::string::npos ? 1 : std::stol(item.substr(hat + 1));
    }
    return out;
}

// "X k:m1,m2^2:t"
SequenceFixture parse_sequence(const ExtDynkinType& t, const std::string& id, const std::string& line) {
    SequenceFixture f;
    f.id = id;
    f.type = t;
    f.subquiver = line[0];
    auto a = line.find(':'), b = line.rfind(':');
    f.kernel = std::stoi(line.substr(2, a - 2));
    f.middle = parse_middle(line.substr(a + 1, b - a - 1));
    f.target = std::stoi(line.substr(b + 1));
    return f;
}

const std::map<int, std::vector<std::string>>& e_table() {
    static const std::map<int, std::vector<std::string>> table = {
        {6,
         {
             "A 1:0,4:1",
             "A 1:0,2,5:3",
             "A 2:3:2",
             "A 1:0,3,6:5",
             "A 3:2,4:3",
             "A 2:1,5:4",
             "A 4:1,3,5:4",
             "A 3:1,2,6:5",
             "A 5:4,6:5",
             "A 4:1,3:6",
             "A 6:5:6",
             "A 1:0,5:2",
             "A 1:0,3,5:4",
             "A 1:0,3:6",
             "A 2:4:3",
             "A 2:1,6:5",
             "A 3:1,2,5:4",
             "A 3:1,2:6",
             "A 4:1,3,6:5",
             "A 2:1:6",
             "A 5:4:6",
             "D 3:0,2^2,6:3",
             "D 1:0^2,2^2:3",
             "D 5:0,2,6^2:5",
             "D 1:0^2,6^2:5",
             "E 2:0^2:6",
        }},
        {7,
         {
             "A 1:0,2:1",
             "A 1:0,4,7:3",
             "A 2:1,3:2",
             "A 2:1,5,7:4",
             "A 3:2,4,7:3",
             "A 3:2,6,7:5",
             "A 4:3,5:4",
             "A 4:3:6",
             "A 5:4,6:5",
             "A 2:1,4:7",
             "A 6:5:6",
             "A 4:2,5:7",
             "A 7:3:7",
             "A 1:0,5,7:4",
             "A 1:0,3:2",
             "A 2:1,6,7:5",
             "A 2:1,4,7:3",
             "A 3:2,7:6",
             "A 3:2,5,7:4",
             "A 1:0,4:7",
             "A 4:3,6:5",
             "A 5:2,6:7",
             "A 5:4:6",
             "A 1:0,6,7:5",
             "A 3:2,4:7",
             "A 2:1,7:6",
             "A 6:2:7",
             "A 1:0,7:6",
             "D 2:1^2,5:2",
             "D 4:0,5^2:7",
             "D 4:1,5^2:4",
             "D 2:1^2,6:7",
             "D 7:1^2:7",
             "E 1:0^2,6^2:5",
        }},
        {8,
         {
             "A 1:0,2:1",
             "A 1:0,4:3",
             "A 2:1,3:2",
             "A 2:1,5:4",
             "A 3:2,4:3",
             "A 3:2,6,8:5",
             "A 4:3,5:4",
             "A 4:3,7,8:6",
             "A 5:4,6,8:5",
             "A 5:4,8:7",
             "A 6:5,7:6",
             "A 4:3,6:8",
             "A 7:6:7",
             "A 6:4,7:8",
             "A 8:5:8",
             "A 1:0,5:4",
             "A 1:0,3:2",
             "A 2:1,6,8:5",
             "A 2:1,4:3",
             "A 3:2,7,8:6",
             "A 3:2,5:4",
             "A 4:3,8:7",
             "A 4:3,6,8:5",
             "A 3:2,6:8",
             "A 5:4,7,8:6",
             "A 7:4:8",
             "A 6:5:7",
             "A 1:0,6,8:5",
             "A 5:4,6:8",
             "A 2:1,7,8:6",
             "A 3:2,8:7",
             "A 2:1,6:8",
             "A 1:0,7,8:6",
             "A 2:1,8:7",
             "A 1:0,6:8",
             "A 1:0,8:7",
             "D 4:3^2,7:4",
             "D 8:1,7^2:8",
             "D 6:3,7^2:6",
             "D 6:0,7^3:8",
             "D 6:2,7^2:8",
             "D 4:3^2:8",
             "E 3:2^2:7",
        }},
    };
    return table;
}

}  // namespace

std::set<int> SequenceFixture::knitting_set() const {
    std::set<int> s{0};
    for (const auto& [v, a] : middle) s.insert(v);
    return s;
}

std::set<int> SequenceFixture::subquiver_vertices() const {
    LabelledDoubleQuiver q = build_extended(type);
    std::set<int> blocked = knitting_set();
    std::set<int> out;
    std::function<void(int)> visit = [&](int v) {
        if (blocked.count(v) || !out.insert(v).second) return;
        for (int u : q.neighbours(v)) visit(u);
    };
    visit(kernel);
    visit(target);
    return out;
}

Weight component_weight(const SequenceFixture& f) {
    Weight w = Weight::Constant(f.type.vertex_count(), FieldElem(1));
    for (int v : f.subquiver_vertices()) w(v) = FieldElem(0);
    return w;
}

std::vector<SequenceFixture> worked_sequences() {
    ExtDynkinType d5 = ExtDynkinType::make(Family::D, 5);
    return {parse_sequence(d5, "D5-worked-1", "A 1:0,5:4"), parse_sequence(d5, "D5-worked-2", "D 5:0^2:4")};
}

std::vector<SequenceFixture> d_sequences(int n) {
    ExtDynkinType t = ExtDynkinType::make(Family::D, n);
    std::vector<SequenceFixture> out;
    std::set<std::string> seen;
    auto add = [&](char sub, int k, std::map<int, long> mid, int tgt) {
        SequenceFixture f;
        f.type = t;
        f.subquiver = sub;
        f.kernel = k;
        f.middle = std::move(mid);
        f.target = tgt;
        std::string key = std::to_string(k) + ">" + std::to_string(tgt);
        for (auto& [v, a] : f.middle) key += "," + std::to_string(v) + "^" + std::to_string(a);
        if (!seen.insert(key).second) return;
        f.id = "D" + std::to_string(n) + "-" + sub + "-" + std::to_string(out.size() + 1);
        out.push_back(std::move(f));
    };
    const int a = n - 1, b = n;
    // type A subquivers
    if (n == 4)
        add('A', 3, {{0, 1}, {1, 1}}, 4);
    else
        add('A', n - 1, {{n - 3, 1}}, n);
    for (auto [m, mp] : {std::pair{a, b}, std::pair{b, a}}) {
        for (int i = 1; i <= n - 2; ++i) {
            if (i == 2)
                add('A', i, {{0, 1}, {1, 1}, {mp, 1}}, m);
            else
                add('A', i, {{i - 1, 1}, {mp, 1}}, m);
        }
        add('A', m, {{n - 2, 1}}, m);
    }
    for (int i = 1; i <= n - 2; ++i) {
        if (i == 2)
            add('A', i, {{0, 1}, {1, 1}, {a, 1}, {b, 1}}, n - 2);
        else
            add('A', i, {{i - 1, 1}, {a, 1}, {b, 1}}, n - 2);
    }
    for (int i = 1; i <= n - 3; ++i)
        for (int j = i; j <= n - 3; ++j) {
            if (i == 1 && j == 1)
                add('A', 1, {{2, 1}}, 1);
            else if (i == 2)
                add('A', 2, {{0, 1}, {1, 1}, {j + 1, 1}}, j);
            else
                add('A', i, {{i - 1, 1}, {j + 1, 1}}, j);
        }
    // type D subquivers
    for (int i = 0; i <= n - 4; ++i) {
        std::map<int, long> mid = i == 0 ? std::map<int, long>{{0, 2}}
                                 : i == 1 ? std::map<int, long>{{0, 1}, {1, 1}}
                                          : std::map<int, long>{{i, 1}};
        for (auto [m, mp] : {std::pair{a, b}, std::pair{b, a}}) {
            if ((n - i) % 2 == 0)
                add('D', m, mid, m);
            else
                add('D', mp, mid, m);
        }
    }
    return out;
}

std::vector<SequenceFixture> e_sequences(int n) {
    ExtDynkinType t = ExtDynkinType::make(Family::E, n);
    std::vector<SequenceFixture> out;
    const auto& rows = e_table().at(n);
    for (std::size_t k = 0; k < rows.size(); ++k)
        out.push_back(parse_sequence(t, "E" + std::to_string(n) + "-" + rows[k][0] + "-" + std::to_string(k + 1), rows[k]));
    return out;
}

std::vector<SequenceFixture> all_sequences() {
    std::vector<SequenceFixture> out = worked_sequences();
    for (int n = 4; n <= 8; ++n)
        for (auto& f : d_sequences(n)) out.push_back(f);
    for (int n = 6; n <= 8; ++n)
        for (auto& f : e_sequences(n)) out.push_back(f);
    return out;
}

std::vector<MapFixture> map_fixtures() {
    auto D = [](int n) { return ExtDynkinType::make(Family::D, n); };
    auto E = [](int n) { return ExtDynkinType::make(Family::E, n); };
    auto mk = [](std::string id, ExtDynkinType t, const std::string& seq, std::vector<std::string> psi,
                 std::vector<std::string> phi) {
        return MapFixture{id, parse_sequence(t, id, seq), std::move(psi), std::move(phi), {}, {}, {}};
    };
    std::vector<MapFixture> out = {
        mk("D4-A", D(4), "A 3:0,1:4", {"a4.~a0", "a4.~a1"}, {"a0.~a3", "a1.~a3"}),
        mk("D6-A", D(6), "A 5:3:6", {"a6.~a3"}, {"a3.~a5"}),
        mk("D5-worked-1", D(5), "A 1:0,5:4", {"~a4.a2.~a0", "-~a4.a5"}, {"a0.~a1", "~a5.a2.~a1"}),
        mk("D5-worked-2", D(5), "D 5:0^2:4", {"~a4.a2.~a0", "~a4.a5.~a5.a2.~a0"}, {"a0.~a1.a1.~a2.a5", "a0.~a2.a5"}),
        mk("D10-A-1", D(10), "A 2:0,1,9:10",
           {"a10.~a7.a6.~a5.a4.~a3.a2.~a0", "a10.~a7.a6.~a5.a4.~a3.a2.~a1", "a10.~a9"},
           {"a0", "a1", "a9.~a7.a6.~a5.a4.~a3.a2"}),
        mk("D10-A-2", D(10), "A 2:0,1,9,10:8",
           {"~a7.a6.~a5.a4.~a3.a2.~a0", "~a7.a6.~a5.a4.~a3.a2.~a1", "~a9", "~a10"},
           {"a0", "a1", "a9.~a7.a6.~a5.a4.~a3.a2", "a10.~a7.a6.~a5.a4.~a3.a2"}),
        mk("D10-D", D(10), "D 10:0^2:10",
           {"a10.~a7.a6.~a5.a4.~a3.a2.~a0", "-a10.~a9.a9.~a7.a6.~a5.a4.~a3.a2.~a0"},
           {"a0.~a1.a1.~a2.a3.~a4.a5.~a6.a7.~a10", "a0.~a2.a3.~a4.a5.~a6.a7.~a10"}),
        mk("E6-D-1", E(6), "D 3:0,2^2,6:3", {"~a3.a1.~a0", "-~a2", "~a3.a1.~a1.a3.~a2", "-~a3.a4.~a5"},
           {"a0.~a1.a3", "a2.~a3.a4.~a4.a3", "a2", "a5.~a4.a3"}),
        mk("E6-D-2", E(6), "D 1:0^2,2^2:3", {"~a3.a1.~a0", "-~a3.a4.~a5.a5.~a4.a1.~a0", "-~a2", "~a3.a1.~a1.a3.~a2"},
           {"a0.~a1.a3.~a3.a1", "a0", "a2.~a3.a4.~a4.a3.~a3.a1", "a2.~a3.a1"}),
        mk("E6-E", E(6), "E 2:0^2:6", {"a5.~a4.a1.~a0", "a5.~a4.a3.~a3.a3.~a3.a1.~a0"},
           {"a0.~a1.a4.~a4.a1.~a1.a3.~a2", "a0.~a1.a3.~a2"}),
        mk("E7-D-1", E(7), "D 2:1^2,5:2", {"-a2.~a7.a7.~a2.a1", "a1", "a2.~a3.a4"},
           {"~a1", "~a1.a2.~a3.a3.~a2", "~a4.a3.~a2"}),
        mk("E7-D-2", E(7), "D 4:0,5^2:7", {"a7.~a2.a1.~a0", "-a7.~a3.a4", "a7.~a3.a3.~a7.a7.~a3.a4"},
           {"a0.~a1.a2.~a3", "~a4.a3.~a2.a2.~a3", "~a4"}),
        mk("E7-D-3", E(7), "D 7:1^2:7", {"a7.~a2.a1", "a7.~a2.a2.~a3.a3.~a2.a1"},
           {"~a1.a2.~a2.a2.~a2.a2.~a7", "~a1.a2.~a7"}),
        mk("E7-E", E(7), "E 1:0^2,6^2:5",
           {"-~a4.a3.~a2.a1.~a0", "~a4.a3.~a2.a2.~a3.a3.~a7.a7.~a2.a1.~a0", "-~a5", "~a4.a3.~a2.a2.~a3.a4.~a5"},
           {"a0.~a1.a2.~a3.a3.~a2.a1", "a0", "a5.~a4.a3.~a7.a7.~a2.a2.~a3.a3.~a2.a1", "a5.~a4.a3.~a2.a1"}),
        mk("E8-D-1", E(8), "D 4:3^2,7:4", {"a3", "-a4.~a8.a8.~a4.a3", "a4.~a5.a6"},
           {"~a3.a4.~a5.a5.~a4", "~a3", "~a6.a5.~a4"}),
        mk("E8-D-2", E(8), "D 6:2,7^2:8", {"a8.~a4.a3.~a2", "a8", "-a8.~a4.a3.~a3.a4.~a5.a6"},
           {"a2.~a3.a4.~a5", "~a4.a3.~a3.a4.~a8.a8.~a5", "~a6"}),
        mk("E8-D-3", E(8), "D 4:3^2:8", {"a8.~a4.a3", "a8.~a5.a5.~a5.a5.~a4.a3"}, {"~a3.a4.~a8.a8.~a4", "~a3"}),
        mk("E8-D-4", E(8), "D 8:1,7^2:8", {"a8.~a4.a3.~a2.a1", "-a8.~a5.a6", "a8.~a5.a5.~a8.a8.~a5.a4"},
           {"~a1.a2.~a3.a4.~a8", "~a6.a5.~a4.a4.~a4.a4.~a8", "~a4.a5.~a8"}),
        mk("E8-D-5", E(8), "D 6:0,7^3:8",
           {"a8.~a4.a3.~a2.a1.~a0", "a8.~a5.a6", "a8.~a5.a5.~a8.a8.~a5.a6", "-a8.~a5.a5.~a8.a8.~a5.a5.~a8.a8.~a5.a6"},
           {"a0.~a1.a2.~a3.a4.~a5", "~a6.a5.~a4.a4.~a4.a4.~a4.a4.~a5", "~a6.a5.~a4.a4.~a5", "~a6"}),
        mk("E8-E", E(8), "E 3:2^2:7", {"~a6.a5.~a4.a3.~a2", "~a6.a5.~a8.a8.~a5.a5.~a5.a5.~a4.a3.~a2"},
           {"a2.~a3.a4.~a8.a8.~a4.a3", "a2"}),
    };
    for (auto& m : out) {
        if (m.id == "E7-D-3") {
            m.corrected_psi = m.psi;
            m.corrected_phi = {"~a1.a2.~a7.a7.~a3.a3.~a7", "~a1.a2.~a7"};
            m.erratum = "first phi entry replaced by the path the accompanying calculation cancels against";
        }
        if (m.id == "E8-D-4") {
            m.corrected_psi = {"a8.~a4.a3.~a2.a1", "a8.~a5.a6", "a8.~a5.a5.~a8.a8.~a5.a6"};
            m.corrected_phi = {"~a1.a2.~a3.a4.~a8", "~a6.a5.~a4.a4.~a4.a4.~a8", "~a6.a5.~a8"};
            m.erratum = "a4 -> a6 in the last psi and phi entries (printed paths do not compose); second psi sign flipped";
        }
    }
    return out;
}

Eigen::MatrixXi printed_hom_matrix(int n) {
    Eigen::MatrixXi H(n, n);
    if (n == 6)
        H << 4, 2, 4, 6, 4, 2,
             2, 2, 3, 4, 3, 2,
             4, 3, 6, 8, 6, 3,
             6, 4, 8, 12, 8, 4,
             4, 3, 6, 8, 6, 3,
             2, 2, 3, 4, 3, 2;
    else if (n == 7)
        H << 4, 6, 8, 6, 4, 2, 4,
             6, 12, 16, 12, 8, 4, 8,
             8, 16, 24, 18, 12, 6, 12,
             6, 12, 18, 15, 10, 5, 9,
             4, 8, 12, 10, 8, 4, 6,
             2, 4, 6, 5, 6, 3, 3,
             4, 8, 12, 9, 6, 3, 7;
    else if (n == 8)
        H << 4, 6, 8, 10, 12, 8, 4, 6,
             6, 12, 16, 20, 24, 16, 8, 12,
             8, 16, 24, 30, 36, 24, 12, 18,
             10, 20, 30, 40, 48, 32, 16, 24,
             12, 24, 36, 48, 60, 40, 20, 30,
             8, 16, 24, 32, 40, 28, 14, 20,
             4, 8, 12, 16, 20, 14, 8, 10,
             6, 12, 18, 24, 30, 20, 10, 16;
    else
        throw DomainError("printed Hom matrices exist for E6, E7, E8 only");
    return H;
}

std::vector<Erratum> hom_matrix_errata() { return {{7, 6, 5, 6, 4}}; }

std::vector<long> printed_u_dims(int n) {
    switch (n) {
        case 6: return {22, 16, 30, 42, 30, 16};
        case 7: return {34, 66, 96, 75, 52, 27, 49};
        case 8: return {58, 114, 168, 220, 270, 182, 92, 136};
    }
    throw DomainError("printed U dimensions exist for E6, E7, E8 only");
}

long printed_total(int n) {
    switch (n) {
        case 6: return 156;
        case 7: return 399;
        case 8: return 1240;
    }
    throw DomainError("printed totals exist for E6, E7, E8 only");
}

}  // namespace ppa
