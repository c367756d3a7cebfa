#pragma once

#include <cstddef>
#include <filesystem>
#include <fstream>
#include <functional>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "losq/integer.hpp"
#include "losq/triangle.hpp"

namespace losq::oeis {

struct BFileEntry {
    long long index;
    Integer value;
};

// Parsed OEIS b-file: consecutive indices, arbitrary first index (the
// sequence offset).
struct BFile {
    std::string id;
    std::vector<BFileEntry> entries;

    long long offset() const { return entries.empty() ? 0 : entries.front().index; }
};

inline bool valid_sequence_id(const std::string& id) {
    if (id.size() < 2 || id[0] != 'A') return false;
    for (std::size_t i = 1; i < id.size(); ++i)
        if (id[i] < '0' || id[i] > '9') return false;
    return true;
}

inline bool is_integer_token(const std::string& s) {
    if (s.empty()) return false;
    std::size_t i = s[0] == '-' ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
        if (s[i] < '0' || s[i] > '9') return false;
    return true;
}

// Data lines are "<index> <value>"; '#' comment lines and blank lines are
// skipped. Malformed lines and index gaps are errors.
inline BFile parse_bfile(const std::string& id, const std::string& text) {
    BFile f{id, {}};
    std::istringstream in(text);
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line[0] == '#') continue;
        std::size_t sp = line.find(' ');
        std::string idx = line.substr(0, sp == std::string::npos ? line.size() : sp);
        std::string val = sp == std::string::npos ? std::string() : line.substr(sp + 1);
        if (!is_integer_token(idx) || !is_integer_token(val))
            throw std::runtime_error(id + ": malformed b-file line " + std::to_string(lineno) + ": " + line);
        long long index = std::stoll(idx);
        if (!f.entries.empty() && index != f.entries.back().index + 1)
            throw std::runtime_error(id + ": non-consecutive index at line " + std::to_string(lineno));
        f.entries.push_back({index, Integer(val)});
    }
    if (f.entries.empty()) throw std::runtime_error(id + ": b-file has no data lines");
    return f;
}

inline std::string serialize_bfile(const BFile& f) {
    std::string out;
    for (const BFileEntry& e : f.entries) out += std::to_string(e.index) + " " + e.value.str() + "\n";
    return out;
}

// How a triangle or family is flattened into one sequence.
enum class ViewKind { rows, column, diagonal, scalar };

struct SequenceView {
    ViewKind kind = ViewKind::rows;
    long long k = 0;  // column index, or offset d of the diagonal T(d+i, i)
};

inline std::vector<Integer> linearize(const Triangle<Integer>& t, const SequenceView& v) {
    std::vector<Integer> out;
    long long top = static_cast<long long>(t.max_n());
    switch (v.kind) {
        case ViewKind::rows:
            for (long long n = 0; n <= top; ++n)
                for (long long k = 0; k <= n; ++k) out.push_back(t.at_or_zero(n, k));
            break;
        case ViewKind::column:
            if (v.k < 0 || v.k > top) throw std::invalid_argument("linearize: column outside triangle");
            for (long long n = v.k; n <= top; ++n) out.push_back(t.at_or_zero(n, v.k));
            break;
        case ViewKind::diagonal:
            if (v.k < 0 || v.k > top) throw std::invalid_argument("linearize: diagonal outside triangle");
            for (long long i = 0; v.k + i <= top; ++i) out.push_back(t.at_or_zero(v.k + i, i));
            break;
        case ViewKind::scalar:
            throw std::invalid_argument("linearize: scalar view has no triangle");
    }
    return out;
}

struct CompareResult {
    bool matched = false;
    int shift = 0;           // ours[ref_index + shift] lined up with the reference
    std::size_t compared = 0;
    std::string detail;
};

// Tries index shifts |s| <= window in order of increasing magnitude and
// accepts the first full agreement on a non-empty overlap; on failure the
// reported mismatch uses the unshifted alignment.
inline CompareResult compare_with_shifts(const std::vector<Integer>& ours, const BFile& ref, int window = 4) {
    auto overlap_mismatch = [&](long long s, std::size_t& count) -> const BFileEntry* {
        count = 0;
        const BFileEntry* bad = nullptr;
        for (const BFileEntry& e : ref.entries) {
            long long pos = e.index + s;
            if (pos < 0 || pos >= static_cast<long long>(ours.size())) continue;
            ++count;
            if (!bad && ours[static_cast<std::size_t>(pos)] != e.value) bad = &e;
        }
        return bad;
    };
    for (int mag = 0; mag <= window; ++mag)
        for (int s : {mag, -mag}) {
            std::size_t count = 0;
            const BFileEntry* bad = overlap_mismatch(s, count);
            if (count > 0 && !bad) {
                CompareResult r;
                r.matched = true;
                r.shift = s;
                r.compared = count;
                r.detail = ref.id + ": " + std::to_string(count) + " terms agree at shift " + std::to_string(s);
                return r;
            }
            if (s == 0) break;  // +0 and -0 are the same alignment
        }
    CompareResult r;
    std::size_t count = 0;
    const BFileEntry* bad = overlap_mismatch(0, count);
    if (count == 0) {
        r.detail = ref.id + ": no overlap between computed terms and b-file within shift window";
    } else if (bad) {
        r.detail = ref.id + ": first mismatch at index " + std::to_string(bad->index) + ": ours=" +
                   ours[static_cast<std::size_t>(bad->index)].str() + " reference=" + bad->value.str();
    } else {
        r.detail = ref.id + ": no shift in window aligns the sequences";
    }
    return r;
}

// Verbatim on-disk copy of fetched b-files, one <id>.txt per sequence.
class BFileCache {
public:
    explicit BFileCache(std::filesystem::path dir) : dir_(std::move(dir)) {}

    const std::filesystem::path& dir() const { return dir_; }

    std::optional<std::string> load(const std::string& id) const {
        std::ifstream in(dir_ / (id + ".txt"), std::ios::binary);
        if (!in) return std::nullopt;
        std::ostringstream buf;
        buf << in.rdbuf();
        return buf.str();
    }

    // Write-temp-then-rename so a torn write never corrupts the cache.
    void store(const std::string& id, const std::string& text) const {
        std::filesystem::create_directories(dir_);
        std::filesystem::path tmp = dir_ / (id + ".txt.tmp");
        {
            std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
            if (!out) throw std::runtime_error("cache: cannot write " + tmp.string());
            out << text;
        }
        std::filesystem::rename(tmp, dir_ / (id + ".txt"));
    }

private:
    std::filesystem::path dir_;
};

inline std::string bfile_url(const std::string& id) {
    return "https://oeis.org/" + id + "/b" + id.substr(1) + ".txt";
}

// Returns the body on success, nullopt on any transport failure.
using Fetcher = std::function<std::optional<std::string>(const std::string& url)>;

// Offline: cache only. Online: fetch and cache, falling back to a cached
// copy when the fetch fails.
inline std::string get_bfile_text(const std::string& id, const BFileCache& cache, const Fetcher& fetch, bool offline) {
    if (!valid_sequence_id(id)) throw std::invalid_argument("bad OEIS sequence id: " + id);
    if (!offline && fetch) {
        if (std::optional<std::string> body = fetch(bfile_url(id))) {
            cache.store(id, *body);
            return *body;
        }
    }
    if (std::optional<std::string> cached = cache.load(id)) return *cached;
    throw std::runtime_error(id + (offline ? ": not in cache and fetching is disabled" : ": fetch failed and no cached copy"));
}

}  // namespace losq::oeis
