#include "hurwitz/rational.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <cstdlib>
#include <cstring>
#include <new>

namespace hurwitz {

std::string to_string(const Rational& r) { return r.get_str(); }

namespace {

bool is_integer_literal(std::string_view s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);

  const auto slash = text.find('/');
  std::string_view num = text.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view{"1"} : text.substr(slash + 1);
  if (!is_integer_literal(num) || !is_integer_literal(den) || den[0] == '-' || den[0] == '+') {
    throw std::invalid_argument("malformed rational: '" + std::string(text) + "'");
  }
  if (num[0] == '+') num.remove_prefix(1);

  mpz_class n(std::string(num), 10);
  mpz_class d(std::string(den), 10);
  if (d == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
  Rational r(n, d);
  r.canonicalize();
  return r;
}

}  // namespace hurwitz

// ---------------------------------------------------------------------------
// GMP block recycling
//
// Multivector arithmetic creates and destroys many one- and two-limb
// integers. GMP reports the block size on free, so small blocks go to a
// per-thread free list keyed by size instead of back to malloc.

namespace {

constexpr std::size_t kPooledLimit = 64;  // bytes
constexpr std::size_t kClasses = kPooledLimit / 8;

struct FreeBlock {
  FreeBlock* next;
};

// Trivially initialized so access needs no TLS guard.
thread_local std::array<FreeBlock*, kClasses> heads{};
thread_local bool retired = false;

// Returns a thread's cached blocks to malloc when the thread ends.
struct Reaper {
  bool armed = false;
  ~Reaper() {
    for (FreeBlock*& head : heads) {
      while (head) {
        FreeBlock* next = head->next;
        std::free(head);
        head = next;
      }
    }
    retired = true;
  }
};

thread_local Reaper reaper;

bool pooled(std::size_t size) { return size != 0 && size <= kPooledLimit && size % 8 == 0; }

void* checked_malloc(std::size_t size) {
  void* p = std::malloc(size);
  if (!p) throw std::bad_alloc();
  return p;
}

void* pool_allocate(std::size_t size) {
  if (pooled(size) && !retired) {
    FreeBlock*& head = heads[size / 8 - 1];
    if (head) {
      FreeBlock* b = head;
      head = b->next;
      return b;
    }
  }
  return checked_malloc(size);
}

void pool_free(void* p, std::size_t size) {
  if (pooled(size) && !retired) {
    FreeBlock*& head = heads[size / 8 - 1];
    if (!head) reaper.armed = true;
    auto* b = static_cast<FreeBlock*>(p);
    b->next = head;
    head = b;
    return;
  }
  std::free(p);
}

void* pool_reallocate(void* p, std::size_t old_size, std::size_t new_size) {
  if (old_size == new_size) return p;
  if (!pooled(old_size) && !pooled(new_size)) {
    void* q = std::realloc(p, new_size);
    if (!q) throw std::bad_alloc();
    return q;
  }
  void* q = pool_allocate(new_size);
  std::memcpy(q, p, std::min(old_size, new_size));
  pool_free(p, old_size);
  return q;
}

const bool installed = [] {
  mp_set_memory_functions(pool_allocate, pool_reallocate, pool_free);
  return true;
}();

}  // namespace
