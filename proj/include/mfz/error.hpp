#ifndef MFZ_ERROR_HPP
#define MFZ_ERROR_HPP

#include <stdexcept>
#include <string>

namespace mfz {

enum class Errc {
  bad_dimensions,
  not_probability_vector,
  not_regular,
  overflow,
  no_barrier,
  not_found,
  not_a_barrier,
  budget,
  not_square,
  negative_entry,
  not_concave,
  degenerate_word,
  unresolved,
  bad_sample_count,
  bad_config,
};

inline const char* errc_name(Errc c) {
  switch (c) {
    case Errc::bad_dimensions: return "BadDimensions";
    case Errc::not_probability_vector: return "NotAProbabilityVector";
    case Errc::not_regular: return "NotRegular";
    case Errc::overflow: return "Overflow";
    case Errc::no_barrier: return "NoBarrier";
    case Errc::not_found: return "NotFound";
    case Errc::not_a_barrier: return "NotABarrier";
    case Errc::budget: return "Budget";
    case Errc::not_square: return "NotSquare";
    case Errc::negative_entry: return "NegativeEntry";
    case Errc::not_concave: return "NotConcave";
    case Errc::degenerate_word: return "DegenerateWord";
    case Errc::unresolved: return "Unresolved";
    case Errc::bad_sample_count: return "BadSampleCount";
    case Errc::bad_config: return "BadConfig";
  }
  return "Unknown";
}

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}
  Errc code() const { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) { throw Error(code, what); }

// Computational failures exit 1 from the CLI; everything else is a usage error (exit 2).
inline bool is_computational(Errc c) {
  return c == Errc::budget || c == Errc::overflow || c == Errc::unresolved || c == Errc::not_found;
}

}  // namespace mfz

#endif
