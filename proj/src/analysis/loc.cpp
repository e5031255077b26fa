#include "heat1d/analysis/loc.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>
#include <system_error>

namespace heat1d::analysis {

namespace {

std::string lower(std::string text) {
    std::transform(text.begin(), text.end(), text.begin(), [](unsigned char c) { return std::tolower(c); });
    return text;
}

bool starts_with_at(std::string_view line, std::size_t pos, std::string_view token) {
    return !token.empty() && line.substr(pos, token.size()) == token;
}

bool is_blank(std::string_view line) {
    return std::all_of(line.begin(), line.end(), [](unsigned char c) { return std::isspace(c); });
}

CommentSyntax c_family() { return {{"//"}, {{"/*", "*/"}}, "\""}; }

}  // namespace

CommentRules CommentRules::builtin() {
    CommentRules rules;
    for (const char* ext : {".c", ".h", ".cc", ".cpp", ".cxx", ".c++", ".hh", ".hpp", ".hxx", ".ipp", ".inl", ".tpp",
                            ".java", ".go", ".swift", ".js", ".ts", ".cs", ".chpl", ".ci", ".cu"})
        rules.set(ext, c_family());
    rules.set(".rs", {{"//"}, {{"/*", "*/"}}, "\""});
    for (const char* ext : {".py", ".sh", ".cmake", ".yaml", ".yml", ".toml"}) rules.set(ext, {{"#"}, {}, "\"'"});
    rules.set(".jl", {{"#"}, {{"#=", "=#"}}, "\""});
    return rules;
}

void CommentRules::set(std::string extension, CommentSyntax syntax) {
    by_extension_[lower(std::move(extension))] = std::move(syntax);
}

const CommentSyntax* CommentRules::find(const std::filesystem::path& file) const {
    const auto it = by_extension_.find(lower(file.extension().string()));
    return it == by_extension_.end() ? nullptr : &it->second;
}

LineCounts count_lines(std::string_view text, const CommentSyntax& syntax) {
    LineCounts counts;
    std::string_view closer;  // non-empty while inside a block comment

    std::size_t begin = 0;
    while (begin < text.size()) {
        std::size_t end = text.find('\n', begin);
        if (end == std::string_view::npos) end = text.size();
        std::string_view line = text.substr(begin, end - begin);
        begin = end + 1;

        if (is_blank(line)) {
            ++counts.blank;
            continue;
        }

        bool code = false;
        std::size_t i = 0;
        while (i < line.size()) {
            if (!closer.empty()) {
                const std::size_t close = line.find(closer, i);
                if (close == std::string_view::npos) break;
                i = close + closer.size();
                closer = {};
                continue;
            }
            const char c = line[i];
            if (std::isspace(static_cast<unsigned char>(c))) {
                ++i;
                continue;
            }
            if (syntax.quotes.find(c) != std::string::npos) {
                code = true;
                ++i;
                while (i < line.size() && line[i] != c) i += line[i] == '\\' ? 2 : 1;
                ++i;
                continue;
            }
            // block openers first: Julia's "#=" also starts with the line marker "#"
            const auto block = std::find_if(syntax.block.begin(), syntax.block.end(),
                                            [&](const auto& b) { return starts_with_at(line, i, b.first); });
            if (block != syntax.block.end()) {
                closer = block->second;
                i += block->first.size();
                continue;
            }
            if (std::any_of(syntax.line.begin(), syntax.line.end(),
                            [&](const std::string& t) { return starts_with_at(line, i, t); }))
                break;
            code = true;
            ++i;
        }
        if (code)
            ++counts.code;
        else
            ++counts.comment;
    }
    return counts;
}

LineCounts LocReport::total() const noexcept {
    LineCounts sum;
    for (const auto& f : files) sum += f.counts;
    return sum;
}

LocReport count_loc(const std::filesystem::path& root, const CommentRules& rules) {
    namespace fs = std::filesystem;
    LocReport report;
    std::vector<fs::path> candidates;

    std::error_code ec;
    if (fs::is_regular_file(root, ec)) {
        candidates.push_back(root);
    } else {
        fs::recursive_directory_iterator it(root, fs::directory_options::skip_permission_denied, ec);
        if (ec) {
            report.skipped.emplace_back(root, ec.message());
            return report;
        }
        for (const fs::recursive_directory_iterator end; it != end; it.increment(ec)) {
            if (ec) {
                report.skipped.emplace_back(root, ec.message());
                break;
            }
            if (it->is_regular_file(ec)) candidates.push_back(it->path());
        }
    }
    std::sort(candidates.begin(), candidates.end());

    for (const auto& path : candidates) {
        const CommentSyntax* syntax = rules.find(path);
        if (!syntax) continue;
        std::ifstream in(path, std::ios::binary);
        if (!in) {
            report.skipped.emplace_back(path, "cannot open for reading");
            continue;
        }
        std::ostringstream buffer;
        buffer << in.rdbuf();
        if (in.bad()) {
            report.skipped.emplace_back(path, "read failed");
            continue;
        }
        report.files.push_back({path, count_lines(buffer.str(), *syntax)});
    }
    return report;
}

}  // namespace heat1d::analysis
