// io.hpp
// JSON documents exchanged by the command-line tool. Real numbers are
// written as decimal strings at the candidate's full precision.

#ifndef HEAWOOD_IO_HPP
#define HEAWOOD_IO_HPP

#include <string>
#include <vector>

#include "heawood/chain.hpp"
#include "heawood/charpoly.hpp"
#include "heawood/incidence.hpp"
#include "heawood/verify.hpp"

namespace heawood {

/// {"theta": "...", "branch": [b0..b5], "precision": d,
///  "vertices": {"P1": ["x", "y"], ...}, "closure": "..."}
std::string candidate_to_json(const EmbeddingCandidate& c);
EmbeddingCandidate candidate_from_json(const std::string& text);

/// A JSON array of candidates, one object per line-indented element.
std::string candidates_to_json(const std::vector<EmbeddingCandidate>& cs);
std::vector<EmbeddingCandidate> candidates_from_json(const std::string& text);

/// {"pass": bool, "max_flag_residual": "...", "regularity_margin": "...",
///  "matched_table": n | null, ...}
std::string certificates_to_json(const std::vector<Certificate>& certs);

/// {"lines": {"l1": ["P7","P3","P1"], ...}, "flags": [["P1","l1"], ...]}
std::string incidence_to_json(const IncidenceStructure& inc);

struct RootReport {
    IsolatingInterval interval;
    Real root;
};

/// [{"lo": "p/q", "hi": "p/q", "root": "..."}]
std::string roots_to_json(const std::vector<RootReport>& roots, int digits);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& text);

} // namespace heawood

#endif // HEAWOOD_IO_HPP
