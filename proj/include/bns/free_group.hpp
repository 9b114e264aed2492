#pragma once

#include <initializer_list>
#include <string>
#include <vector>

namespace bns {

/// A freely reduced word over x_1..x_m. Letter +k is x_k, -k is x_k^{-1}.
class FreeWord {
 public:
  FreeWord() = default;
  FreeWord(std::initializer_list<int> letters);
  explicit FreeWord(std::vector<int> letters);

  static FreeWord letter(int generator) { return FreeWord({generator}); }

  const std::vector<int>& letters() const noexcept { return letters_; }
  std::size_t size() const noexcept { return letters_.size(); }
  bool empty() const noexcept { return letters_.empty(); }
  FreeWord inverse() const;

  /// Appends `other` with cancellation at the junction.
  FreeWord& operator*=(const FreeWord& other);
  friend FreeWord operator*(FreeWord lhs, const FreeWord& rhs) { return lhs *= rhs; }

  friend bool operator==(const FreeWord&, const FreeWord&) = default;

 private:
  std::vector<int> letters_;
};

/// Free reduction of an arbitrary letter sequence.
std::vector<int> free_reduce(const std::vector<int>& letters);

/// Letters as x1 X1 x2 ... (capital = inverse); "1" for the empty word.
std::string to_string(const FreeWord& w);

/// An automorphism of F_m given by the images of the basis letters together
/// with the images under its inverse.
class FreeGroupAut {
 public:
  /// Checks that `inverse_images` undo `images` on every basis letter.
  FreeGroupAut(std::vector<FreeWord> images, std::vector<FreeWord> inverse_images);

  static FreeGroupAut identity(int rank);

  int rank() const noexcept { return static_cast<int>(images_.size()); }
  const std::vector<FreeWord>& images() const noexcept { return images_; }
  const std::vector<FreeWord>& inverse_images() const noexcept { return inverse_images_; }

  /// Image of an arbitrary word (substitute letter images, reduce).
  FreeWord apply(const FreeWord& w) const;
  FreeGroupAut inverse() const;

  /// Total letter count of all basis images.
  std::size_t image_length() const;

 private:
  struct Unchecked {};
  FreeGroupAut(Unchecked, std::vector<FreeWord> images, std::vector<FreeWord> inverse_images)
      : images_(std::move(images)), inverse_images_(std::move(inverse_images)) {}

  friend FreeGroupAut compose(const FreeGroupAut& first, const FreeGroupAut& second);

  std::vector<FreeWord> images_;
  std::vector<FreeWord> inverse_images_;
};

/// "first, then second", matching left-to-right products of braids: the
/// result sends x to second(first(x)). Throws SizeMismatch on rank mismatch.
FreeGroupAut compose(const FreeGroupAut& first, const FreeGroupAut& second);

/// Equal iff every basis letter has the same reduced image.
bool aut_equal(const FreeGroupAut& f, const FreeGroupAut& g);

}  // namespace bns
