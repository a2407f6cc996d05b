#pragma once

#include <map>
#include <string>

namespace gabm {

using TemplateVars = std::map<std::string, std::string>;

/// Substitute {name} placeholders from `vars`. Placeholder names may contain
/// letters, digits, '_' and '.'. Throws TemplateError on an unknown name.
std::string render_template(const std::string& tmpl, const TemplateVars& vars);

/// Placeholder names appearing in a template, in order of first occurrence.
std::vector<std::string> template_placeholders(const std::string& tmpl);

} // namespace gabm
