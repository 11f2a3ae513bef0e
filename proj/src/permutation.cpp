#include "bwtnice/permutation.hpp"

#include <array>
#include <cctype>
#include <numeric>
#include <sstream>

#include "bwtnice/error.hpp"

namespace bwtnice {

Permutation::Permutation(std::vector<Element> images)
    : images_(std::move(images)) {
  std::vector<bool> seen(images_.size() + 1, false);
  for (Element v : images_) {
    if (v < 1 || v > images_.size() || seen[v]) {
      throw Error(ErrorCode::kInvalidPermutation,
                  "one-line form is not a bijection on 1.." +
                      std::to_string(images_.size()));
    }
    seen[v] = true;
  }
}

Permutation Permutation::identity(std::size_t n) {
  std::vector<Element> images(n);
  std::iota(images.begin(), images.end(), Element{1});
  return Permutation(std::move(images));
}

std::string CycleDecomposition::to_string() const {
  std::string out;
  for (const auto& cycle : cycles) {
    out.push_back('(');
    for (std::size_t k = 0; k < cycle.size(); ++k) {
      if (k > 0) out.push_back(',');
      out.append(std::to_string(cycle[k]));
    }
    out.push_back(')');
  }
  return out;
}

Permutation standard_permutation(std::string_view w) {
  // Cumulative symbol counts, then a right-to-left scan hands out the
  // largest remaining rank of each symbol, so ties resolve by position.
  std::array<Element, 256> count{};
  for (char ch : w) ++count[static_cast<unsigned char>(ch)];
  for (std::size_t s = 1; s < count.size(); ++s) count[s] += count[s - 1];
  std::vector<Element> images(w.size());
  for (std::size_t i = w.size(); i-- > 0;) {
    const auto s = static_cast<unsigned char>(w[i]);
    images[i] = count[s]--;
  }
  return Permutation(std::move(images));
}

CycleDecomposition cycle_decomposition(const Permutation& pi) {
  const std::size_t n = pi.size();
  std::vector<bool> visited(n + 1, false);
  CycleDecomposition out;
  // Scanning j upwards means the first unvisited element of each cycle is
  // its minimum, so the result is already canonical.
  for (Element start = 1; start <= n; ++start) {
    if (visited[start]) continue;
    std::vector<Element> cycle;
    for (Element j = start; !visited[j]; j = pi(j)) {
      visited[j] = true;
      cycle.push_back(j);
    }
    out.cycles.push_back(std::move(cycle));
  }
  return out;
}

std::size_t cycle_count(const Permutation& pi) {
  const std::size_t n = pi.size();
  std::vector<bool> visited(n + 1, false);
  std::size_t count = 0;
  for (Element start = 1; start <= n; ++start) {
    if (visited[start]) continue;
    ++count;
    for (Element j = start; !visited[j]; j = pi(j)) visited[j] = true;
  }
  return count;
}

bool is_cyclic(const Permutation& pi) {
  if (pi.size() == 0) return false;
  std::size_t length = 1;
  for (Element j = pi(1); j != 1; j = pi(j)) ++length;
  return length == pi.size();
}

int sign(const Permutation& pi) {
  return (pi.size() - cycle_count(pi)) % 2 == 0 ? 1 : -1;
}

Permutation sigma_i_direct(const Permutation& sigma_w, std::size_t i) {
  const std::size_t n = sigma_w.size();
  if (i < 1 || i > n + 1) {
    throw Error(ErrorCode::kIndexOutOfRange,
                "sentinel position " + std::to_string(i) + " outside 1.." +
                    std::to_string(n + 1));
  }
  std::vector<Element> images(n + 1);
  for (std::size_t j = 1; j <= n + 1; ++j) {
    if (j < i) {
      images[j - 1] = sigma_w(static_cast<Element>(j)) + 1;
    } else if (j == i) {
      images[j - 1] = 1;
    } else {
      images[j - 1] = sigma_w(static_cast<Element>(j - 1)) + 1;
    }
  }
  return Permutation(std::move(images));
}

Permutation sigma_i_direct(std::string_view w, std::size_t i) {
  return sigma_i_direct(standard_permutation(w), i);
}

Permutation apply_dollar_step(const Permutation& sigma_i, std::size_t i) {
  if (i < 1 || i >= sigma_i.size() || sigma_i(static_cast<Element>(i)) != 1) {
    throw Error(ErrorCode::kInvalidState,
                "sentinel step needs sigma_i(i) = 1 and i < n+1 (i = " +
                    std::to_string(i) + ")");
  }
  std::vector<Element> images(sigma_i.one_line().begin(),
                              sigma_i.one_line().end());
  images[i - 1] = images[i];
  images[i] = 1;
  return Permutation(std::move(images));
}

TranspositionResult transpose_cycles(const Permutation& pi, Element x,
                                     Element y) {
  if (x == y) {
    throw Error(ErrorCode::kInvalidArgument,
                "transposition needs two distinct elements");
  }
  if (x < 1 || y < 1 || x > pi.size() || y > pi.size()) {
    throw Error(ErrorCode::kIndexOutOfRange, "element outside permutation");
  }
  bool same = false;
  for (Element j = pi(x); j != x; j = pi(j)) {
    if (j == y) {
      same = true;
      break;
    }
  }
  std::vector<Element> images(pi.one_line().begin(), pi.one_line().end());
  std::swap(images[x - 1], images[y - 1]);
  return {Permutation(std::move(images)),
          same ? TranspositionKind::kSplit : TranspositionKind::kMerge};
}

Permutation parse_cycles(std::string_view text, std::size_t n) {
  std::vector<Element> images(n, 0);
  std::size_t pos = 0;
  auto skip_space = [&] {
    while (pos < text.size() &&
           std::isspace(static_cast<unsigned char>(text[pos]))) {
      ++pos;
    }
  };
  auto fail = [&](const std::string& why) -> Error {
    return Error(ErrorCode::kInvalidPermutation,
                 "cannot parse cycles '" + std::string(text) + "': " + why);
  };
  skip_space();
  while (pos < text.size()) {
    if (text[pos] != '(') throw fail("expected '('");
    ++pos;
    std::vector<Element> cycle;
    for (;;) {
      skip_space();
      std::size_t start = pos;
      while (pos < text.size() &&
             std::isdigit(static_cast<unsigned char>(text[pos]))) {
        ++pos;
      }
      if (start == pos) throw fail("expected element");
      const unsigned long value =
          std::stoul(std::string(text.substr(start, pos - start)));
      if (value < 1 || value > n) throw fail("element out of range");
      cycle.push_back(static_cast<Element>(value));
      skip_space();
      if (pos < text.size() && text[pos] == ',') {
        ++pos;
        continue;
      }
      if (pos < text.size() && text[pos] == ')') {
        ++pos;
        break;
      }
      throw fail("expected ',' or ')'");
    }
    for (std::size_t k = 0; k < cycle.size(); ++k) {
      Element& slot = images[cycle[k] - 1];
      if (slot != 0) throw fail("element repeated");
      slot = cycle[(k + 1) % cycle.size()];
    }
    skip_space();
  }
  return Permutation(std::move(images));
}

}  // namespace bwtnice
