#include "aop/perm.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <numeric>
#include <sstream>

#include "aop/error.hpp"

namespace aop {

Perm::Perm(std::vector<int> images) : images_(std::move(images)) {
  const int n = arity();
  std::vector<char> seen(images_.size(), 0);
  for (int v : images_) {
    if (v < 1 || v > n || seen[static_cast<std::size_t>(v - 1)])
      throw InputError("not a permutation: " + to_string(*this));
    seen[static_cast<std::size_t>(v - 1)] = 1;
  }
}

Perm Perm::identity(int n) {
  Perm p;
  p.images_.resize(static_cast<std::size_t>(n));
  std::iota(p.images_.begin(), p.images_.end(), 1);
  return p;
}

bool Perm::is_identity() const {
  for (int i = 0; i < arity(); ++i)
    if (images_[static_cast<std::size_t>(i)] != i + 1) return false;
  return true;
}

Perm compose(const Perm& p, const Perm& q) {
  if (p.arity() != q.arity())
    throw InputError("compose: arity mismatch " + std::to_string(p.arity()) + " vs " +
                     std::to_string(q.arity()));
  std::vector<int> out(static_cast<std::size_t>(p.arity()));
  for (int i = 1; i <= p.arity(); ++i) out[static_cast<std::size_t>(i - 1)] = p(q(i));
  return Perm::trusted(std::move(out));
}

Perm inverse(const Perm& p) {
  std::vector<int> out(static_cast<std::size_t>(p.arity()));
  for (int i = 1; i <= p.arity(); ++i) out[static_cast<std::size_t>(p(i) - 1)] = i;
  return Perm::trusted(std::move(out));
}

Perm block_sum(std::span<const Perm> ps) {
  std::vector<int> out;
  int offset = 0;
  for (const Perm& p : ps) {
    for (int v : p.images()) out.push_back(v + offset);
    offset += p.arity();
  }
  return Perm::trusted(std::move(out));
}

Perm block_perm(const Perm& p, std::span<const int> sizes) {
  const int n = p.arity();
  if (static_cast<int>(sizes.size()) != n)
    throw InputError("block_perm: " + std::to_string(sizes.size()) + " sizes for arity " +
                     std::to_string(n));
  for (int k : sizes)
    if (k < 0) throw InputError("block_perm: negative block size");

  // scratch: [0, n] input offsets, [n+1, 2n+1] output offsets, then p^-1.
  const std::size_t un = static_cast<std::size_t>(n);
  std::vector<int> scratch(3 * un + 2, 0);
  int* in_off = scratch.data();
  int* out_off = in_off + un + 1;
  int* pinv = out_off + un + 1;
  for (int i = 1; i <= n; ++i) pinv[p(i) - 1] = i;
  for (int i = 1; i <= n; ++i) {
    in_off[i] = in_off[i - 1] + sizes[static_cast<std::size_t>(i - 1)];
    out_off[i] = out_off[i - 1] + sizes[static_cast<std::size_t>(pinv[i - 1] - 1)];
  }
  std::vector<int> out(static_cast<std::size_t>(in_off[n]));
  for (int i = 1; i <= n; ++i) {
    const int width = sizes[static_cast<std::size_t>(i - 1)];
    const int src = in_off[i - 1];
    const int dst = out_off[p(i) - 1];
    for (int t = 0; t < width; ++t) out[static_cast<std::size_t>(src + t)] = dst + t + 1;
  }
  return Perm::trusted(std::move(out));
}

std::vector<Perm> all_perms(int n) {
  std::vector<Perm> out;
  std::vector<int> images(static_cast<std::size_t>(n));
  std::iota(images.begin(), images.end(), 1);
  do {
    out.emplace_back(images);
  } while (std::next_permutation(images.begin(), images.end()));
  return out;
}

Perm adjacent_transposition(int i, int n) {
  if (i < 1 || i >= n) throw InputError("adjacent transposition out of range");
  std::vector<int> images(static_cast<std::size_t>(n));
  std::iota(images.begin(), images.end(), 1);
  std::swap(images[static_cast<std::size_t>(i - 1)], images[static_cast<std::size_t>(i)]);
  return Perm(std::move(images));
}

std::vector<int> adjacent_factorization(const Perm& p) {
  // Right-multiplying by t_i swaps images i and i+1; sort the images and read
  // the swaps back in reverse.
  std::vector<int> images = p.images();
  std::vector<int> swaps;
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i + 1 < images.size(); ++i) {
      if (images[i] > images[i + 1]) {
        std::swap(images[i], images[i + 1]);
        swaps.push_back(static_cast<int>(i) + 1);
        changed = true;
      }
    }
  }
  std::reverse(swaps.begin(), swaps.end());
  return swaps;
}

std::string to_string(const Perm& p) {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < p.images().size(); ++i) {
    if (i) os << ',';
    os << p.images()[i];
  }
  os << ']';
  return os.str();
}

Perm parse_perm(std::string_view text) {
  std::string compact;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) compact.push_back(c);
  if (compact.size() < 2 || compact.front() != '[' || compact.back() != ']')
    throw InputError("permutation must look like [2,1,3]: '" + std::string(text) + "'");
  std::vector<int> images;
  std::string_view body(compact);
  body = body.substr(1, body.size() - 2);
  while (!body.empty()) {
    const auto comma = body.find(',');
    const std::string_view item = body.substr(0, comma);
    int value = 0;
    const auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), value);
    if (ec != std::errc() || ptr != item.data() + item.size() || item.empty())
      throw InputError("bad permutation entry '" + std::string(item) + "'");
    images.push_back(value);
    if (comma == std::string_view::npos) break;
    body.remove_prefix(comma + 1);
    if (body.empty()) throw InputError("trailing comma in permutation");
  }
  return Perm(std::move(images));
}

}  // namespace aop
