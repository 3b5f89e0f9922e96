#ifndef KCHORD_ERRORS_HPP
#define KCHORD_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace kchord {

enum class errc {
  vertex_out_of_range,
  adjacent_endpoints,
  duplicate_chord,
  chord_limit_exceeded,
  k_too_large,
  n_too_small,
  k_below_3,
  instance_too_large,
  n_too_large_for_oracle,
  bad_stage,
  n_too_small_for_family,
  no_hamilton_cycle,
  graph_too_large,
  domain_error,
  parse_error,
  invalid_argument,
  overflow,
};

const char* errc_name(errc c);

class error : public std::runtime_error {
 public:
  error(errc code, const std::string& msg)
      : std::runtime_error(std::string(errc_name(code)) + ": " + msg), code_(code) {}

  errc code() const noexcept { return code_; }

 private:
  errc code_;
};

}  // namespace kchord

#endif
