#include "ydlab/catalog.hpp"

namespace ydlab {

namespace {

FiniteGroup cyclic(int n, const std::string& name) {
    std::vector<std::string> labels;
    for (int k = 0; k < n; ++k) labels.push_back(k == 0 ? "e" : "g" + std::to_string(k));
    std::vector<std::vector<int>> table(n, std::vector<int>(n));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) table[a][b] = (a + b) % n;
    return make_group(name, std::move(labels), std::move(table));
}

FiniteGroup klein4() {
    std::vector<std::string> labels{"e", "a", "b", "c"};
    // c = ab, every element of order two
    std::vector<std::vector<int>> table{{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
    return make_group("klein4", std::move(labels), std::move(table));
}

FiniteGroup s3() {
    // permutations of {0,1,2}: e, r=(012), rr=(021), s=(01), sr=(02), srr=(12)
    std::vector<std::vector<int>> perms{{0, 1, 2}, {1, 2, 0}, {2, 0, 1},
                                        {1, 0, 2}, {2, 1, 0}, {0, 2, 1}};
    std::vector<std::string> labels{"e", "r", "rr", "s", "sr", "srr"};
    const int n = 6;
    auto compose = [&](int a, int b) {
        // (a then b reading right-to-left: (ab)(x) = a(b(x)))
        std::vector<int> c(3);
        for (int x = 0; x < 3; ++x) c[x] = perms[a][perms[b][x]];
        for (int k = 0; k < n; ++k)
            if (perms[k] == c) return k;
        return -1;
    };
    std::vector<std::vector<int>> table(n, std::vector<int>(n));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) table[a][b] = compose(a, b);
    return make_group("s3", std::move(labels), std::move(table));
}

FiniteGroup d4() {
    // symmetries of the square: rotations r^k and reflections f r^k
    auto mulperm = [](const std::vector<int>& a, const std::vector<int>& b) {
        std::vector<int> c(4);
        for (int x = 0; x < 4; ++x) c[x] = a[b[x]];
        return c;
    };
    std::vector<int> r{1, 2, 3, 0}, f{0, 3, 2, 1}, e{0, 1, 2, 3};
    std::vector<std::vector<int>> perms;
    std::vector<std::string> labels;
    std::vector<int> cur = e;
    for (int k = 0; k < 4; ++k) {
        perms.push_back(cur);
        labels.push_back(k == 0 ? "e" : "r" + std::to_string(k));
        cur = mulperm(r, cur);
    }
    cur = f;
    for (int k = 0; k < 4; ++k) {
        perms.push_back(cur);
        labels.push_back(k == 0 ? "f" : "fr" + std::to_string(k));
        cur = mulperm(r, cur);
    }
    const int n = 8;
    std::vector<std::vector<int>> table(n, std::vector<int>(n));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            auto c = mulperm(perms[a], perms[b]);
            for (int k = 0; k < n; ++k)
                if (perms[k] == c) table[a][b] = k;
        }
    return make_group("d4", std::move(labels), std::move(table));
}

} // namespace

GroupAction regular_action(const FiniteGroup& G) {
    std::vector<std::vector<int>> perm(G.order, std::vector<int>(G.order));
    for (int g = 0; g < G.order; ++g)
        for (int s = 0; s < G.order; ++s) perm[g][s] = G.mul(g, s);
    return make_group_action(G.name + "-regular", G, G.order, std::move(perm));
}

std::optional<FiniteGroup> catalog_group(const std::string& name) {
    if (name == "z2") return cyclic(2, "z2");
    if (name == "z3") return cyclic(3, "z3");
    if (name == "z4") return cyclic(4, "z4");
    if (name == "klein4") return klein4();
    if (name == "s3") return s3();
    if (name == "d4") return d4();
    return std::nullopt;
}

std::optional<GroupAction> catalog_action(const std::string& name) {
    if (name == "z2-on-2points") return regular_action(cyclic(2, "z2"));
    if (name == "z3-on-z3") return regular_action(cyclic(3, "z3"));
    if (name == "s3-on-3points") {
        FiniteGroup G = s3();
        // the defining permutation action on {0,1,2}
        std::vector<std::vector<int>> perms{{0, 1, 2}, {1, 2, 0}, {2, 0, 1},
                                            {1, 0, 2}, {2, 1, 0}, {0, 2, 1}};
        return make_group_action("s3-on-3points", std::move(G), 3, std::move(perms));
    }
    const auto dash = name.find("-regular");
    if (dash != std::string::npos) {
        auto g = catalog_group(name.substr(0, dash));
        if (g) return regular_action(*g);
    }
    return std::nullopt;
}

std::vector<std::string> catalog_group_names() {
    return {"z2", "z3", "z4", "klein4", "s3", "d4"};
}

std::vector<std::string> catalog_action_names() {
    return {"z2-on-2points", "z3-on-z3", "s3-on-3points"};
}

} // namespace ydlab
