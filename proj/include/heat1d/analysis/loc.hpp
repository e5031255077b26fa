#pragma once

#include <cstddef>
#include <filesystem>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace heat1d::analysis {

/// Comment delimiters of one language.
struct CommentSyntax {
    std::vector<std::string> line;
    std::vector<std::pair<std::string, std::string>> block;
    /// Characters that open a single-line string literal; comment markers
    /// inside such literals are ignored.
    std::string quotes = "\"";
};

/// Comment syntax keyed by lower-case file extension (".cpp").
class CommentRules {
public:
    static CommentRules builtin();

    void set(std::string extension, CommentSyntax syntax);
    const CommentSyntax* find(const std::filesystem::path& file) const;
    bool empty() const noexcept { return by_extension_.empty(); }

private:
    std::map<std::string, CommentSyntax, std::less<>> by_extension_;
};

struct LineCounts {
    std::size_t code = 0;
    std::size_t comment = 0;
    std::size_t blank = 0;

    LineCounts& operator+=(const LineCounts& other) noexcept {
        code += other.code;
        comment += other.comment;
        blank += other.blank;
        return *this;
    }
    friend bool operator==(const LineCounts&, const LineCounts&) = default;
};

/// Classifies each line as blank, comment-only, or code. A line holding
/// any code counts as code even when it also carries a comment.
LineCounts count_lines(std::string_view text, const CommentSyntax& syntax);

struct FileLoc {
    std::filesystem::path path;
    LineCounts counts;
};

struct LocReport {
    std::vector<FileLoc> files;  // sorted by path
    std::vector<std::pair<std::filesystem::path, std::string>> skipped;  // unreadable files

    LineCounts total() const noexcept;
};

/// Walks `root` (a directory or a single file) and counts every file whose
/// extension has rules. Unreadable files are recorded in `skipped`.
LocReport count_loc(const std::filesystem::path& root, const CommentRules& rules = CommentRules::builtin());

}  // namespace heat1d::analysis
