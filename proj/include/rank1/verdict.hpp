#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>

namespace rank1 {

enum class Answer { Yes, No, Unknown };

const char* to_string(Answer answer) noexcept;

/// Three-valued answer to a question about an infinite object.
///
/// `detail` carries the witness (Yes), the certificate (No) or the reason the
/// search stopped (Unknown). `bound` is the exhausted bound for Unknown.
/// `index` is set when a No is refuted at a concrete position or gap index.
struct Verdict {
  Answer answer = Answer::Unknown;
  std::string detail;
  std::int64_t bound = 0;
  std::optional<std::int64_t> index;

  static Verdict yes(std::string witness = {}) { return {Answer::Yes, std::move(witness), 0, std::nullopt}; }
  static Verdict no(std::string certificate, std::optional<std::int64_t> at = std::nullopt) {
    return {Answer::No, std::move(certificate), 0, at};
  }
  static Verdict unknown(std::int64_t exhausted, std::string why = {}) {
    return {Answer::Unknown, std::move(why), exhausted, std::nullopt};
  }

  bool is_yes() const noexcept { return answer == Answer::Yes; }
  bool is_no() const noexcept { return answer == Answer::No; }
  bool is_unknown() const noexcept { return answer == Answer::Unknown; }
};

}  // namespace rank1
