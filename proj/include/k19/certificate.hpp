#pragma once

#include <string>
#include <utility>

#include <json.hpp>

namespace k19 {

using Json = nlohmann::ordered_json;

/// Machine-readable pass/fail record for one verified claim.
/// A failing certificate always carries a witness.
struct Certificate {
    std::string claim;
    bool pass = false;
    Json witness = nullptr;
    Json metrics = Json::object();

    Json to_json() const {
        Json j;
        j["claim"] = claim;
        j["status"] = pass ? "pass" : "fail";
        j["witness"] = witness;
        j["metrics"] = metrics;
        return j;
    }

    static Certificate passed(std::string claim, Json metrics = Json::object()) {
        Certificate c;
        c.claim = std::move(claim);
        c.pass = true;
        c.metrics = std::move(metrics);
        return c;
    }

    static Certificate failed(std::string claim, Json witness, Json metrics = Json::object()) {
        Certificate c;
        c.claim = std::move(claim);
        c.pass = false;
        c.witness = std::move(witness);
        c.metrics = std::move(metrics);
        return c;
    }
};

}  // namespace k19
