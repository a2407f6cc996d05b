#include "gabm/text_template.hpp"

#include <cctype>
#include <vector>

#include "gabm/errors.hpp"

namespace gabm {

namespace {

bool placeholder_char(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '.';
}

// Returns the placeholder starting at tmpl[i] == '{', or empty if the brace
// does not open a well-formed placeholder.
std::string placeholder_at(const std::string& tmpl, std::size_t i, std::size_t* end) {
    std::size_t j = i + 1;
    while (j < tmpl.size() && placeholder_char(tmpl[j])) ++j;
    if (j == i + 1 || j >= tmpl.size() || tmpl[j] != '}') return {};
    *end = j;
    return tmpl.substr(i + 1, j - i - 1);
}

} // namespace

std::string render_template(const std::string& tmpl, const TemplateVars& vars) {
    std::string out;
    out.reserve(tmpl.size());
    for (std::size_t i = 0; i < tmpl.size(); ++i) {
        if (tmpl[i] != '{') {
            out += tmpl[i];
            continue;
        }
        std::size_t end = 0;
        std::string name = placeholder_at(tmpl, i, &end);
        if (name.empty()) {
            out += tmpl[i];
            continue;
        }
        auto it = vars.find(name);
        if (it == vars.end()) throw TemplateError(name);
        out += it->second;
        i = end;
    }
    return out;
}

std::vector<std::string> template_placeholders(const std::string& tmpl) {
    std::vector<std::string> names;
    for (std::size_t i = 0; i < tmpl.size(); ++i) {
        if (tmpl[i] != '{') continue;
        std::size_t end = 0;
        std::string name = placeholder_at(tmpl, i, &end);
        if (name.empty()) continue;
        bool seen = false;
        for (const auto& n : names) seen = seen || n == name;
        if (!seen) names.push_back(name);
        i = end;
    }
    return names;
}

} // namespace gabm
