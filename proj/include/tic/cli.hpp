#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "tic/tracks.hpp"

namespace tic::cli {

inline constexpr int kExitHolds = 0;
inline constexpr int kExitFails = 1;
inline constexpr int kExitInconclusive = 2;
inline constexpr int kExitUsage = 64;

/// Runs one command; args excludes the program name. Returns the exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, std::istream& in);

/// Certificates for the claim on the selected tracks, B first. A math error
/// on one track becomes an inconclusive certificate for that track.
std::vector<Certificate> check_claim(const Claim& claim, bool track_a, bool track_b, int order);

/// 1 if any certificate fails, else 0 if any holds, else 2.
int exit_code(const std::vector<Certificate>& certs);

struct GalleryEntry {
  std::string name;
  ClaimKind kind = ClaimKind::ContinuityAt;
  std::string expr;
  std::string domain;
  std::optional<std::string> point;
  std::optional<std::string> limit;
  Outcome expect_b = Outcome::Holds;
  Outcome expect_a = Outcome::Holds;
  std::string anchor;
  /// Spot checks of the sqrt(2) paraphrase instead of a claim.
  bool paraphrase = false;
};

const std::vector<GalleryEntry>& gallery_entries();

/// Runs every entry whose name contains filter; prints a table. Returns 0 iff
/// all selected entries match their expected outcomes.
int gallery(const std::string& filter, std::ostream& out);

/// Line-oriented calculator over the hyperreal field. Prints a prompt only
/// when interactive.
void repl(std::istream& in, std::ostream& out, int order, bool interactive);

}  // namespace tic::cli
