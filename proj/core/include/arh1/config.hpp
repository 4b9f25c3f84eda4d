#ifndef ARH1_CONFIG_HPP
#define ARH1_CONFIG_HPP

#include <map>
#include <stdexcept>
#include <string>

namespace arh1 {

/// Plain-text key=value configuration.  Lines are `key = value`; `#`
/// starts a comment; keys are dotted paths (e.g. `interval.a`).
class Config {
 public:
  static Config from_file(const std::string& path);
  static Config from_string(const std::string& text);

  bool has(const std::string& key) const;
  std::string get_string(const std::string& key,
                         const std::string& fallback) const;
  double get_double(const std::string& key, double fallback) const;
  long get_long(const std::string& key, long fallback) const;
  bool get_bool(const std::string& key, bool fallback) const;

  void set(const std::string& key, const std::string& value);
  const std::map<std::string, std::string>& entries() const { return map_; }

 private:
  std::map<std::string, std::string> map_;
};

/// Error type for malformed configuration input; the CLI maps it to its
/// configuration exit code.
struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace arh1

#endif
