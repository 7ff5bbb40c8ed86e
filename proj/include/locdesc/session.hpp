#pragma once

#include <map>
#include <memory>
#include <string>

#include <json.hpp>

#include "locdesc/spectral.hpp"

namespace locdesc {

// A fully resolved session: field, universe, and the named objects the CLI
// subcommands operate on. Field and universe are heap-held so square
// classes and parameters can point at them safely.
class Session {
public:
    static Session from_json(const nlohmann::json& j);
    static Session from_file(const std::string& path);

    const FieldModel& field() const { return *field_; }
    const Universe& universe() const { return *universe_; }

    const LParameter& parameter(const std::string& name) const;
    // character together with the parameter it lives on
    const std::pair<std::string, CompCharacter>& character(const std::string& name) const;
    const ReprDatum& representation(const std::string& name) const;

    const std::map<std::string, LParameter>& parameters() const { return parameters_; }
    const std::map<std::string, std::pair<std::string, CompCharacter>>& characters() const {
        return characters_;
    }
    const std::map<std::string, ReprDatum>& representations() const { return representations_; }
    const nlohmann::json& fixture_block() const { return fixtures_; }

    // parsing helpers shared with the CLI's inline literals
    LParameter parse_parameter(const nlohmann::json& j) const;
    CompCharacter parse_character_signs(const LParameter& phi, const nlohmann::json& j,
                                        CompCharacter::Domain domain) const;
    QSpace parse_space(const nlohmann::json& j) const;
    Block parse_block(const nlohmann::json& j) const;

    Session(Session&&) = default;
    Session& operator=(Session&&) = default;

private:
    Session() = default;
    std::unique_ptr<FieldModel> field_;
    std::unique_ptr<Universe> universe_;
    std::map<std::string, LParameter> parameters_;
    std::map<std::string, std::pair<std::string, CompCharacter>> characters_;
    std::map<std::string, ReprDatum> representations_;
    nlohmann::json fixtures_;
};

// canonical JSON encodings used by the machine-readable report section
nlohmann::json to_json(const FieldModel& F, SquareClass a);
nlohmann::json to_json(const QSpace& V);
nlohmann::json to_json(const LParameter& phi);
nlohmann::json to_json(const LParameter& phi, const CompCharacter& chr);
nlohmann::json to_json(const DescentResult& r);
nlohmann::json to_json(const ReprDatum& d);

}  // namespace locdesc
