#include "ktorus/golden.hpp"

namespace ktorus {

namespace {

GoldenRow make_row(std::size_t n, unsigned long rank, std::vector<long> k0_orders,
                   std::vector<long> k1_orders) {
    GoldenRow row;
    row.n = n;
    row.rank = rank;
    row.k0_orders = std::move(k0_orders);
    row.k1_orders = std::move(k1_orders);
    std::vector<mpz_class> t0(row.k0_orders.begin(), row.k0_orders.end());
    std::vector<mpz_class> t1(row.k1_orders.begin(), row.k1_orders.end());
    row.k0 = from_cyclic_orders(rank, t0);
    row.k1 = from_cyclic_orders(rank, t1);
    return row;
}

}  // namespace

const std::vector<GoldenRow>& golden_table() {
    static const std::vector<GoldenRow> table = [] {
        std::vector<GoldenRow> t;
        t.push_back(make_row(1, 2, {}, {}));
        t.push_back(make_row(2, 3, {}, {}));
        t.push_back(make_row(3, 4, {}, {}));
        t.push_back(make_row(4, 6, {}, {}));
        t.push_back(make_row(5, 8, {}, {}));
        t.push_back(make_row(6, 13, {}, {2}));
        t.push_back(make_row(7, 20, {}, {}));
        t.push_back(make_row(8, 32, {8, 8}, {18, 18}));
        t.push_back(make_row(9, 52, {3, 3, 9, 9}, {3, 3, 9, 9}));
        t.push_back(make_row(10, 90, {55, 55, 55, 55}, {11, 11, 99, 198, 2574}));
        t.push_back(make_row(11, 152,
                             {11, 11, 11, 11, 11, 11, 11, 11, 11, 11, 11, 11,
                              143, 143, 143, 143, 286, 286},
                             {11, 11, 11, 11, 11, 11, 11, 11, 11, 11, 11, 11,
                              143, 143, 143, 143, 286, 286}));
        return t;
    }();
    return table;
}

}  // namespace ktorus
