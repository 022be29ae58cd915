#pragma once

#include "momentix/series.hpp"

#include <chrono>
#include <filesystem>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

namespace momentix::oeis {

struct BFileEntry {
    long index = 0;
    Integer value;

    friend bool operator==(const BFileEntry&, const BFileEntry&) = default;
};

/// Parsed OEIS b-file: consecutive `index value` lines.
struct BFile {
    std::string anumber;
    std::vector<BFileEntry> entries;

    long offset() const { return entries.empty() ? 0 : entries.front().index; }
    friend bool operator==(const BFile&, const BFile&) = default;
};

/// True for identifiers of the form A followed by six digits.
bool is_anumber(std::string_view id);

/// Parses b-file text. `#` comments and blank lines are skipped; a comment
/// whose first word is an A-number names the file when `anumber` is empty.
/// Throws ParseError(line) on malformed lines and index gaps.
BFile parse_bfile(std::string_view text, std::string anumber = {});
std::string render_bfile(const BFile& bfile);

/// https://oeis.org/A000108/b000108.txt
std::string bfile_url(std::string_view anumber);

struct HttpResponse {
    int status = 0;
    std::string body;
};
/// Performs one GET. Throws NetworkError when no response arrives.
using Transport = std::function<HttpResponse(const std::string& url)>;
Transport default_transport();

/// $OEIS_CACHE_DIR, else $XDG_CACHE_HOME/momentix/oeis, else ~/.cache/momentix/oeis.
std::filesystem::path default_cache_dir();

struct FetchOptions {
    std::filesystem::path cache_dir = default_cache_dir();
    bool offline = false;
    /// Empty means default_transport().
    Transport transport;
    std::chrono::milliseconds retry_backoff{750};
};

struct FetchResult {
    Sequence sequence;
    std::string anumber;
    /// OEIS offset of the first term; the sequence itself is re-indexed from 0.
    long offset = 0;
    bool from_cache = false;
};

/// Serves from the cache when present; otherwise downloads the b-file (one
/// retry), stores it verbatim and returns at most `max_terms` terms.
/// Throws NetworkError, NotFound or ParseError.
FetchResult fetch(std::string_view anumber, std::size_t max_terms, const FetchOptions& options = {});

}  // namespace momentix::oeis
