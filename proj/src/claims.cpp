#include "k19/claims.hpp"

#include <algorithm>

namespace k19::claims {

namespace {

Word w19(const char* text) { return Word::parse(text, 19); }

std::vector<Table1Row> make_table1() {
    std::vector<Table1Row> t;
    t.push_back({"s1+M", 0b0001,
                 {w19("{2,11,14}"), w19("{1,4,7,9}"), w19("{3,6,8,19}"), w19("{5,12,13,16}"),
                  w19("{10,15,17,18}")}});
    t.push_back({"s2+M", 0b0010,
                 {w19("{1,5,6,18}"), w19("{3,9,13,17}"), w19("{4,8,10,12}"),
                  w19("{7,15,16,19}")}});
    t.push_back({"s3+M", 0b0100,
                 {w19("{1,3,12,15}"), w19("{4,5,17,19}"), w19("{6,9,10,16}"),
                  w19("{7,8,13,18}")}});
    t.push_back({"s4+M", 0b1000,
                 {w19("{1,10,13,19}"), w19("{3,4,16,18}"), w19("{5,8,9,15}"),
                  w19("{6,7,12,17}")}});
    t.push_back({"s5+M", 0b1111,
                 {w19("{1,8,16,17}"), w19("{3,5,7,10}"), w19("{4,6,13,15}"),
                  w19("{9,12,18,19}")}});
    return t;
}

}  // namespace

const std::vector<Table1Row>& table1() {
    static const std::vector<Table1Row> t = make_table1();
    return t;
}

const std::vector<Word>& low_weight_words() {
    static const std::vector<Word> all = [] {
        std::vector<Word> ws;
        for (const Table1Row& row : table1())
            ws.insert(ws.end(), row.words.begin(), row.words.end());
        std::sort(ws.begin(), ws.end(), by_weight_support);
        return ws;
    }();
    return all;
}

const std::array<TwoWordIdentity, 6>& step3_identities() {
    static const std::array<TwoWordIdentity, 6> ids = {{
        {0, w19("{1,8,16,17}"), w19("{9,12,18,19}")},
        {1, w19("{2,11,14}"), w19("{10,15,17,18}")},
        {2, w19("{3,9,13,17}"), w19("{7,15,16,19}")},
        {3, w19("{4,8,10,12}"), w19("{7,15,16,19}")},
        {4, w19("{5,12,13,16}"), w19("{10,15,17,18}")},
        {5, w19("{6,9,10,16}"), w19("{7,8,13,18}")},
    }};
    return ids;
}

const std::vector<std::uint8_t>& sigma() {
    static const std::vector<std::uint8_t> s = {0b0001, 0b0010, 0b0100, 0b1000, 0b1111};
    return s;
}

const std::map<int, std::uint64_t>& golay_spectrum() {
    static const std::map<int, std::uint64_t> spec = {
        {0, 1}, {8, 759}, {12, 2576}, {16, 759}, {24, 1}};
    return spec;
}

const Word& distance_witness_word() {
    static const Word w = w19("{1,7,12,13,14}");
    return w;
}

}  // namespace k19::claims
