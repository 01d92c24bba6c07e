#include <doctest.h>

#include <json.hpp>

#include <cstring>
#include <string>

#include "qosp/qosp_c.h"

namespace {

std::string take(char* s) {
    REQUIRE(s != nullptr);
    std::string out(s);
    qosp_string_free(s);
    return out;
}

struct FieldHandle {
    qosp_field* ptr = nullptr;
    ~FieldHandle() { qosp_field_free(ptr); }
};

struct ElemHandle {
    qosp_elem* ptr = nullptr;
    ~ElemHandle() { qosp_elem_free(ptr); }
};

}  // namespace

TEST_CASE("c api: fields and elements") {
    CHECK(std::strlen(qosp_version()) > 0);

    FieldHandle field;
    REQUIRE(qosp_field_new_generic(&field.ptr) == QOSP_OK);

    ElemHandle lhs, rhs;
    REQUIRE(qosp_elem_parse(field.ptr, "e*f + f*e", &lhs.ptr) == QOSP_OK);
    REQUIRE(qosp_elem_parse(field.ptr, "(k - k^-1)/(q - q^-1)", &rhs.ptr) == QOSP_OK);
    CHECK(qosp_elem_equal(lhs.ptr, rhs.ptr) == 1);

    ElemHandle diff;
    REQUIRE(qosp_elem_sub(lhs.ptr, rhs.ptr, &diff.ptr) == QOSP_OK);
    CHECK(qosp_elem_is_zero(diff.ptr) == 1);

    ElemHandle c, s, s2, s2p2;
    REQUIRE(qosp_elem_casimir(field.ptr, &c.ptr) == QOSP_OK);
    REQUIRE(qosp_elem_scasimir(field.ptr, &s.ptr) == QOSP_OK);
    CHECK(qosp_elem_is_central(c.ptr) == 1);
    CHECK(qosp_elem_is_scentral(s.ptr) == 1);
    REQUIRE(qosp_elem_pow(s.ptr, 2, &s2.ptr) == QOSP_OK);
    ElemHandle two;
    REQUIRE(qosp_elem_parse(field.ptr, "2", &two.ptr) == QOSP_OK);
    REQUIRE(qosp_elem_add(s2.ptr, two.ptr, &s2p2.ptr) == QOSP_OK);
    CHECK(qosp_elem_equal(s2p2.ptr, c.ptr) == 1);

    char* text = nullptr;
    REQUIRE(qosp_elem_to_text(s.ptr, &text) == QOSP_OK);
    const std::string s_text = take(text);
    ElemHandle reparsed;
    REQUIRE(qosp_elem_parse(field.ptr, s_text.c_str(), &reparsed.ptr) == QOSP_OK);
    CHECK(qosp_elem_equal(reparsed.ptr, s.ptr) == 1);
}

TEST_CASE("c api: error reporting") {
    FieldHandle field;
    CHECK(qosp_field_new_root(2, &field.ptr) == QOSP_USAGE_ERROR);
    CHECK(std::strlen(qosp_last_error()) > 0);
    REQUIRE(qosp_field_new_root(3, &field.ptr) == QOSP_OK);

    ElemHandle bad;
    CHECK(qosp_elem_parse(field.ptr, "e +* f", &bad.ptr) == QOSP_PARSE_ERROR);
    CHECK(std::string(qosp_last_error()).find("byte") != std::string::npos);
    CHECK(qosp_elem_parse(field.ptr, "1/(q^3 - 1)", &bad.ptr) == QOSP_ARITH_ERROR);
    CHECK(qosp_elem_parse(nullptr, "e", &bad.ptr) == QOSP_USAGE_ERROR);
    CHECK(qosp_elem_equal(nullptr, nullptr) == -1);

    char* out = nullptr;
    CHECK(qosp_rootdata_json(1, &out) == QOSP_USAGE_ERROR);
    CHECK(qosp_cheb_json("x", 3, &out) == QOSP_USAGE_ERROR);
}

TEST_CASE("c api: one-shot json entry points") {
    char* out = nullptr;
    REQUIRE(qosp_rootdata_json(6, &out) == QOSP_OK);
    auto rd = nlohmann::json::parse(take(out));
    CHECK(rd["l"] == 6);
    CHECK(rd["lprime"] == 3);
    CHECK(rd["L"] == 6);
    CHECK(rd["N"] == 24);
    CHECK(rd["twice_odd"] == true);

    REQUIRE(qosp_nf_json(0, "e*f", &out) == QOSP_OK);
    auto nf = nlohmann::json::parse(take(out));
    CHECK(nf["terms"].size() == 3);
    CHECK(nf["field"]["mode"] == "generic");

    REQUIRE(qosp_cheb_json("p", 3, &out) == QOSP_OK);
    auto cheb = nlohmann::json::parse(take(out));
    CHECK(cheb["coeffs"] == nlohmann::json::array({"0", "3", "0", "1"}));

    REQUIRE(qosp_verify_json(3, "srel", 0, nullptr, &out) == QOSP_OK);
    auto verify = nlohmann::json::parse(take(out));
    CHECK(verify["all_pass"] == true);

    CHECK(qosp_verify_json(3, "srel", 0, "srel", &out) == QOSP_VERIFY_FAILED);
    auto corrupted = nlohmann::json::parse(take(out));
    CHECK(corrupted["all_pass"] == false);
    REQUIRE(corrupted["results"].size() == 1);
    CHECK(corrupted["results"][0].contains("lhs"));
    CHECK(corrupted["results"][0].contains("rhs"));

    REQUIRE(qosp_rep_build_json(3, "nilpotent", "z^5", nullptr, nullptr, nullptr, 2, &out) ==
            QOSP_OK);
    const std::string rep_json = take(out);
    REQUIRE(qosp_rep_check_json(rep_json.c_str(), &out) == QOSP_OK);
    auto check = nlohmann::json::parse(take(out));
    CHECK(check["relations_ok"] == true);
    CHECK(check["irreducible_burnside"] == true);
    CHECK(check["central_character"]["E"] == "0");

    REQUIRE(qosp_eval_json(3, rep_json.c_str(), "f*e", &out) == QOSP_OK);
    auto mat = nlohmann::json::parse(take(out));
    CHECK(mat["dim"] == 2);

    // corrupting one matrix entry's sign must fail the relation check
    auto doc = nlohmann::json::parse(rep_json);
    std::string entry = doc["matrices"]["e"]["entries"][0][1];
    doc["matrices"]["e"]["entries"][0][1] = "-(" + entry + ")";
    CHECK(qosp_rep_check_json(doc.dump().c_str(), &out) == QOSP_VERIFY_FAILED);
    auto failed = nlohmann::json::parse(take(out));
    CHECK(failed["relations_ok"] == false);

    REQUIRE(qosp_classify_json(4, &out) == QOSP_OK);
    auto cat = nlohmann::json::parse(take(out));
    CHECK(cat["nilpotent"].size() > 0);
    CHECK(cat["rootdata"]["lprime"] == 4);
}

TEST_CASE("c api: identical invocations produce identical output") {
    char* out = nullptr;
    REQUIRE(qosp_verify_json(6, "centre", 0, nullptr, &out) == QOSP_OK);
    const std::string first = take(out);
    REQUIRE(qosp_verify_json(6, "centre", 0, nullptr, &out) == QOSP_OK);
    CHECK(first == take(out));
    REQUIRE(qosp_classify_json(3, &out) == QOSP_OK);
    const std::string cat = take(out);
    REQUIRE(qosp_classify_json(3, &out) == QOSP_OK);
    CHECK(cat == take(out));
}
