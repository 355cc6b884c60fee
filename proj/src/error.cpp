#include "eisum/error.hpp"

namespace eisum {

const char* to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::InvalidArgument: return "invalid-argument";
    case ErrorKind::DegenerateTable: return "degenerate-table";
    case ErrorKind::RootFindingFailed: return "root-finding-failed";
    case ErrorKind::NearMultiplePole: return "near-multiple-pole";
    case ErrorKind::UseAsymptoticPath: return "use-asymptotic-path";
    case ErrorKind::OnCut: return "on-cut";
    case ErrorKind::NoValidContour: return "no-valid-contour";
    case ErrorKind::BoundUnavailable: return "bound-unavailable";
    case ErrorKind::StokesCollision: return "stokes-collision";
    case ErrorKind::Domain: return "domain";
    case ErrorKind::Io: return "io";
  }
  return "unknown";
}

int exit_code(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::InvalidArgument: return 2;
    case ErrorKind::Domain:
    case ErrorKind::OnCut:
    case ErrorKind::StokesCollision:
    case ErrorKind::NoValidContour:
    case ErrorKind::UseAsymptoticPath: return 3;
    case ErrorKind::DegenerateTable:
    case ErrorKind::NearMultiplePole: return 4;
    case ErrorKind::RootFindingFailed:
    case ErrorKind::BoundUnavailable: return 5;
    case ErrorKind::Io: return 6;
  }
  return 1;
}

}  // namespace eisum
