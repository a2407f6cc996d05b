#include "gabm/persona.hpp"

#include <cstdio>
#include <fstream>
#include <set>

#include "gabm/errors.hpp"
#include "gabm/rng.hpp"

namespace gabm {

std::string format_tendency(double t) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.2f", t);
    std::string s(buf);
    while (s.size() > 3 && s.back() == '0') s.pop_back();
    return s;
}

TemplateVars Persona::prompt_fields() const {
    TemplateVars vars;
    vars["agent_name"] = name;
    vars["persona.name"] = name;
    vars["persona.age"] = std::to_string(age);
    vars["persona.gender"] = gender;
    vars["persona.occupation"] = occupation;
    vars["persona.background"] = background;
    vars["persona.traits"] = traits;
    vars["persona.cooperation_tendency"] = format_tendency(cooperation_tendency);
    return vars;
}

void validate_persona(const Persona& p) {
    if (p.name.empty()) throw ValidationError("persona", "name");
    auto check_text = [&](const std::string& value, const char* field) {
        if (value.empty()) throw ValidationError("persona '" + p.name + "'", field);
    };
    check_text(p.gender, "gender");
    check_text(p.occupation, "occupation");
    check_text(p.background, "background");
    check_text(p.traits, "traits");
    if (p.age <= 0) throw ValidationError("persona '" + p.name + "'", "age");
    if (p.cooperation_tendency < 0.0 || p.cooperation_tendency > 1.0)
        throw ValidationError("persona '" + p.name + "'", "cooperation_tendency");
}

nlohmann::json persona_to_json(const Persona& p) {
    return nlohmann::json{
        {"name", p.name},
        {"age", p.age},
        {"gender", p.gender},
        {"occupation", p.occupation},
        {"background", p.background},
        {"traits", p.traits},
        {"cooperation_tendency", p.cooperation_tendency},
    };
}

Persona persona_from_json(const nlohmann::json& j) {
    Persona p;
    p.name = j.value("name", "");
    p.age = j.value("age", 0);
    p.gender = j.value("gender", "");
    p.occupation = j.value("occupation", "");
    p.background = j.value("background", "");
    p.traits = j.value("traits", "");
    p.cooperation_tendency = j.value("cooperation_tendency", -1.0);
    return p;
}

std::vector<Persona> load_personas(const std::filesystem::path& file) {
    std::ifstream in(file);
    if (!in) throw ConfigError("cannot open persona file: " + file.string());
    nlohmann::json doc = nlohmann::json::parse(in);
    const nlohmann::json& list = doc.is_array() ? doc : doc.at("personas");
    std::vector<Persona> pool;
    for (const auto& item : list) {
        Persona p = persona_from_json(item);
        validate_persona(p);
        pool.push_back(std::move(p));
    }
    return pool;
}

void save_personas(const std::vector<Persona>& pool, const std::filesystem::path& file) {
    nlohmann::json list = nlohmann::json::array();
    for (const auto& p : pool) list.push_back(persona_to_json(p));
    std::ofstream out(file);
    if (!out) throw StorageError("cannot write persona file: " + file.string());
    out << list.dump(2) << "\n";
}

std::vector<Persona> assign_personas(const std::vector<Persona>& pool, int n, std::uint64_t seed) {
    if (pool.empty()) throw ConfigError("persona pool is empty");
    Rng rng(derive_seed(seed, 0x7065727330ULL));

    std::vector<std::size_t> order(pool.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    rng.shuffle(order);

    std::vector<Persona> out;
    out.reserve(static_cast<std::size_t>(n));
    std::set<std::string> used_names;
    for (int i = 0; i < n; ++i) {
        Persona p = (i < static_cast<int>(pool.size()))
                        ? pool[order[static_cast<std::size_t>(i)]]
                        : pool[rng.next_below(pool.size())];
        if (!used_names.insert(p.name).second) {
            int suffix = 2;
            std::string candidate;
            do {
                candidate = p.name + " (" + std::to_string(suffix++) + ")";
            } while (!used_names.insert(candidate).second);
            p.name = candidate;
        }
        out.push_back(std::move(p));
    }
    return out;
}

namespace {

struct LexiconEntry {
    const char* occupation;
    const char* background;
    const char* traits;
};

// occupation x trait lexicon; crossed with the tendency grid below.
constexpr LexiconEntry kLexicon[] = {
    {"School Teacher", "Spent two decades guiding students through group projects",
     "Patient, fair-minded, values shared effort"},
    {"Emergency Nurse", "Works long shifts where teamwork decides outcomes",
     "Pragmatic, caring, quick to help"},
    {"Small Business Owner", "Built a shop from nothing and guards every margin",
     "Thrifty, wary of freeloaders, values reciprocity"},
    {"Software Engineer", "Optimizes systems for a living and play",
     "Analytical, curious, slightly contrarian"},
    {"Retired Judge", "Presided over civil disputes for thirty years",
     "Principled, stern about rule-breaking, even-handed"},
    {"Street Artist", "Lives gig to gig and shares a studio with friends",
     "Spontaneous, generous, distrustful of institutions"},
    {"Insurance Adjuster", "Assesses claims and expects people to game the system",
     "Skeptical, precise, risk-averse"},
    {"Community Organizer", "Coordinates volunteers for neighborhood projects",
     "Persuasive, idealistic, believes in collective action"},
    {"Day Trader", "Chases short-term edges in volatile markets",
     "Competitive, opportunistic, numbers-driven"},
    {"Park Ranger", "Maintains shared land that visitors often abuse",
     "Protective of commons, patient, firm about rules"},
};

constexpr const char* kFirstNames[] = {
    "Ana", "Bram", "Chidi", "Dara", "Elif", "Farid", "Greta", "Hugo",
    "Imani", "Jonas", "Kaia", "Luca", "Mara", "Nils", "Oren", "Priya",
    "Quinn", "Rosa", "Sami", "Tova", "Umar", "Vera", "Wen", "Yara", "Zane",
};

constexpr const char* kLastNames[] = {
    "Abara", "Berg", "Castillo", "Dimitrov", "Eze", "Fontaine", "Grieg",
    "Haddad", "Ishida", "Joshi", "Kovacs", "Lindqvist", "Moreau", "Novak",
    "Okafor", "Petrov", "Quispe", "Ramos", "Sato", "Tanaka", "Urso",
    "Vasquez", "Weber", "Yilmaz", "Zhang",
};

constexpr double kTendencyGrid[] = {0.1, 0.3, 0.5, 0.7, 0.9};

} // namespace

std::vector<Persona> expand_pool(std::vector<Persona> base, int target, std::uint64_t seed) {
    Rng rng(derive_seed(seed, 0x706F6F6CULL));
    std::set<std::string> names;
    for (const auto& p : base) names.insert(p.name);

    std::size_t lex = rng.next_below(std::size(kLexicon));
    std::size_t grid = rng.next_below(std::size(kTendencyGrid));
    int ages[] = {27, 33, 41, 48, 55, 62};
    std::size_t age_ix = rng.next_below(std::size(ages));
    const char* genders[] = {"Female", "Male", "Non-binary"};

    while (static_cast<int>(base.size()) < target) {
        Persona p;
        std::string first = kFirstNames[rng.next_below(std::size(kFirstNames))];
        std::string last = kLastNames[rng.next_below(std::size(kLastNames))];
        p.name = first + " " + last;
        if (!names.insert(p.name).second) continue;

        const LexiconEntry& e = kLexicon[lex++ % std::size(kLexicon)];
        p.occupation = e.occupation;
        p.background = e.background;
        p.traits = e.traits;
        p.age = ages[age_ix++ % std::size(ages)];
        p.gender = genders[rng.next_below(std::size(genders))];
        p.cooperation_tendency = kTendencyGrid[grid++ % std::size(kTendencyGrid)];
        validate_persona(p);
        base.push_back(std::move(p));
    }
    return base;
}

} // namespace gabm
