#include "bns/free_group.hpp"

#include <algorithm>
#include <cstdlib>

#include "bns/errors.hpp"

namespace bns {

std::vector<int> free_reduce(const std::vector<int>& letters) {
  std::vector<int> out;
  out.reserve(letters.size());
  for (int l : letters) {
    if (l == 0) throw Error("0 is not a free-group letter");
    if (!out.empty() && out.back() == -l) {
      out.pop_back();
    } else {
      out.push_back(l);
    }
  }
  return out;
}

FreeWord::FreeWord(std::initializer_list<int> letters)
    : FreeWord(std::vector<int>(letters)) {}

FreeWord::FreeWord(std::vector<int> letters) : letters_(free_reduce(letters)) {}

FreeWord FreeWord::inverse() const {
  FreeWord result;
  result.letters_.reserve(letters_.size());
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) result.letters_.push_back(-*it);
  return result;
}

FreeWord& FreeWord::operator*=(const FreeWord& other) {
  auto next = other.letters_.begin();
  while (next != other.letters_.end() && !letters_.empty() && letters_.back() == -*next) {
    letters_.pop_back();
    ++next;
  }
  letters_.insert(letters_.end(), next, other.letters_.end());
  return *this;
}

std::string to_string(const FreeWord& w) {
  if (w.empty()) return "1";
  std::string out;
  for (int l : w.letters()) {
    if (!out.empty()) out += ' ';
    out += (l > 0 ? 'x' : 'X');
    out += std::to_string(std::abs(l));
  }
  return out;
}

// ------------------------------------------------------------ FreeGroupAut

namespace {

FreeWord substitute(const std::vector<FreeWord>& images, const FreeWord& w) {
  FreeWord out;
  const int rank = static_cast<int>(images.size());
  for (int l : w.letters()) {
    const int k = std::abs(l);
    if (k > rank) throw IndexOutOfRange("letter x" + std::to_string(k) + " beyond the rank");
    const FreeWord& image = images[static_cast<std::size_t>(k - 1)];
    out *= (l > 0 ? image : image.inverse());
  }
  return out;
}

}  // namespace

FreeGroupAut::FreeGroupAut(std::vector<FreeWord> images, std::vector<FreeWord> inverse_images)
    : images_(std::move(images)), inverse_images_(std::move(inverse_images)) {
  if (images_.size() != inverse_images_.size()) {
    throw SizeMismatch("images and inverse images differ in rank");
  }
  for (int k = 1; k <= rank(); ++k) {
    const auto x = FreeWord::letter(k);
    if (substitute(inverse_images_, substitute(images_, x)) != x ||
        substitute(images_, substitute(inverse_images_, x)) != x) {
      throw Error("inverse images do not invert the automorphism on x" + std::to_string(k));
    }
  }
}

FreeGroupAut FreeGroupAut::identity(int rank) {
  std::vector<FreeWord> images;
  for (int k = 1; k <= rank; ++k) images.push_back(FreeWord::letter(k));
  return FreeGroupAut(Unchecked{}, images, images);
}

FreeWord FreeGroupAut::apply(const FreeWord& w) const { return substitute(images_, w); }

FreeGroupAut FreeGroupAut::inverse() const {
  return FreeGroupAut(Unchecked{}, inverse_images_, images_);
}

std::size_t FreeGroupAut::image_length() const {
  std::size_t total = 0;
  for (const auto& w : images_) total += w.size();
  return total;
}

FreeGroupAut compose(const FreeGroupAut& first, const FreeGroupAut& second) {
  if (first.rank() != second.rank()) throw SizeMismatch("automorphisms of different free groups");
  std::vector<FreeWord> images;
  std::vector<FreeWord> inverse_images;
  images.reserve(static_cast<std::size_t>(first.rank()));
  inverse_images.reserve(static_cast<std::size_t>(first.rank()));
  for (int k = 0; k < first.rank(); ++k) {
    const auto idx = static_cast<std::size_t>(k);
    images.push_back(substitute(second.images_, first.images_[idx]));
    inverse_images.push_back(substitute(first.inverse_images_, second.inverse_images_[idx]));
  }
  return FreeGroupAut(FreeGroupAut::Unchecked{}, std::move(images), std::move(inverse_images));
}

bool aut_equal(const FreeGroupAut& f, const FreeGroupAut& g) {
  return f.rank() == g.rank() && f.images() == g.images();
}

}  // namespace bns
