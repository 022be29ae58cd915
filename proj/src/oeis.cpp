#include "momentix/oeis.hpp"

#include "momentix/errors.hpp"

#include <cctype>
#include <cstdlib>
#include <fstream>
#include <map>
#include <memory>
#include <mutex>
#include <sstream>
#include <thread>

namespace momentix::oeis {

namespace {

std::vector<std::string_view> split_words(std::string_view line) {
    std::vector<std::string_view> words;
    std::size_t pos = 0;
    while (pos < line.size()) {
        while (pos < line.size() && std::isspace(static_cast<unsigned char>(line[pos]))) ++pos;
        std::size_t end = pos;
        while (end < line.size() && !std::isspace(static_cast<unsigned char>(line[end]))) ++end;
        if (end > pos) words.push_back(line.substr(pos, end - pos));
        pos = end;
    }
    return words;
}

bool parse_integer(std::string_view word, Integer& out) {
    std::string_view digits = word;
    if (!digits.empty() && (digits.front() == '-' || digits.front() == '+')) digits.remove_prefix(1);
    if (digits.empty()) return false;
    for (char c : digits)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    out = Integer(std::string(word.front() == '+' ? word.substr(1) : word), 10);
    return true;
}

std::mutex& anumber_mutex(const std::string& anumber) {
    static std::mutex registry_guard;
    static std::map<std::string, std::unique_ptr<std::mutex>> registry;
    std::lock_guard lock(registry_guard);
    auto& slot = registry[anumber];
    if (!slot) slot = std::make_unique<std::mutex>();
    return *slot;
}

std::string read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

void write_atomically(const std::filesystem::path& path, const std::string& text) {
    std::filesystem::create_directories(path.parent_path());
    std::filesystem::path temp = path;
    temp += ".tmp." + std::to_string(std::hash<std::thread::id>{}(std::this_thread::get_id()));
    {
        std::ofstream out(temp, std::ios::binary | std::ios::trunc);
        out << text;
        if (!out) throw NetworkError("cannot write cache file " + temp.string());
    }
    std::filesystem::rename(temp, path);
}

FetchResult to_result(const BFile& bfile, std::size_t max_terms, bool from_cache) {
    if (bfile.entries.empty()) throw NotFound(bfile.anumber + " has no terms");
    const std::size_t count = std::min(max_terms, bfile.entries.size());
    std::vector<Rational> terms;
    terms.reserve(count);
    for (std::size_t i = 0; i < count; ++i) terms.emplace_back(bfile.entries[i].value);
    return FetchResult{Sequence(std::move(terms)), bfile.anumber, bfile.offset(), from_cache};
}

}  // namespace

bool is_anumber(std::string_view id) {
    if (id.size() != 7 || id.front() != 'A') return false;
    for (char c : id.substr(1))
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

BFile parse_bfile(std::string_view text, std::string anumber) {
    BFile bfile;
    bfile.anumber = std::move(anumber);
    std::size_t line_no = 0;
    std::size_t start = 0;
    while (start < text.size()) {
        const std::size_t end = std::min(text.find('\n', start), text.size());
        const std::string_view line = text.substr(start, end - start);
        start = end + 1;
        ++line_no;

        const auto words = split_words(line);
        if (words.empty()) continue;
        if (words.front().front() == '#') {
            if (bfile.anumber.empty()) {
                std::string_view first = words.front().substr(1);
                if (first.empty() && words.size() > 1) first = words[1];
                if (is_anumber(first)) bfile.anumber = std::string(first);
            }
            continue;
        }
        if (words.size() != 2) throw ParseError(line_no, "expected 'index value'");

        Integer index;
        BFileEntry entry;
        if (!parse_integer(words[0], index) || !index.fits_slong_p()) throw ParseError(line_no, "bad index");
        if (!parse_integer(words[1], entry.value)) throw ParseError(line_no, "bad value");
        entry.index = index.get_si();
        if (!bfile.entries.empty() && entry.index != bfile.entries.back().index + 1) {
            throw ParseError(line_no, "index " + std::to_string(entry.index) + " does not follow " +
                                          std::to_string(bfile.entries.back().index));
        }
        bfile.entries.push_back(std::move(entry));
    }
    return bfile;
}

std::string render_bfile(const BFile& bfile) {
    std::ostringstream os;
    if (!bfile.anumber.empty()) os << "# " << bfile.anumber << '\n';
    for (const auto& e : bfile.entries) os << e.index << ' ' << e.value.get_str() << '\n';
    return os.str();
}

std::string bfile_url(std::string_view anumber) {
    const std::string id(anumber);
    return "https://oeis.org/" + id + "/b" + id.substr(1) + ".txt";
}

std::filesystem::path default_cache_dir() {
    if (const char* dir = std::getenv("OEIS_CACHE_DIR"); dir && *dir) return dir;
    if (const char* xdg = std::getenv("XDG_CACHE_HOME"); xdg && *xdg) return std::filesystem::path(xdg) / "momentix" / "oeis";
    if (const char* home = std::getenv("HOME"); home && *home) return std::filesystem::path(home) / ".cache" / "momentix" / "oeis";
    return std::filesystem::temp_directory_path() / "momentix-oeis";
}

FetchResult fetch(std::string_view anumber_view, std::size_t max_terms, const FetchOptions& options) {
    const std::string anumber(anumber_view);
    if (!is_anumber(anumber)) throw ParseError(0, "'" + anumber + "' is not an A-number (expected A######)");
    if (max_terms == 0) throw std::invalid_argument("max_terms must be positive");

    std::lock_guard lock(anumber_mutex(anumber));
    const std::filesystem::path cached = options.cache_dir / (anumber + ".txt");
    if (std::filesystem::exists(cached)) {
        return to_result(parse_bfile(read_file(cached), anumber), max_terms, true);
    }
    if (options.offline) throw NetworkError(anumber + " is not cached and network access is disabled");

    const Transport transport = options.transport ? options.transport : default_transport();
    const std::string url = bfile_url(anumber);
    HttpResponse response;
    for (int attempt = 0; attempt < 2; ++attempt) {
        try {
            response = transport(url);
            if (response.status < 500) break;
        } catch (const NetworkError&) {
            if (attempt == 1) throw;
        }
        if (attempt == 0) std::this_thread::sleep_for(options.retry_backoff);
    }
    if (response.status == 404) throw NotFound(anumber + " not found on the OEIS");
    if (response.status != 200) throw NetworkError("GET " + url + " returned HTTP " + std::to_string(response.status));

    const BFile bfile = parse_bfile(response.body, anumber);
    if (bfile.entries.empty()) throw NotFound(anumber + " has no b-file terms");
    write_atomically(cached, response.body);
    return to_result(bfile, max_terms, false);
}

}  // namespace momentix::oeis
