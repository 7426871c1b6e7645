#ifndef MRQA_ERRORS_HPP
#define MRQA_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace mrqa {

// Malformed or out-of-contract inputs (empty series, non-positive window, ...).
class invalid_input_error : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Structurally valid inputs that make the requested quantity meaningless
// (constant series in estimate_lambda_k, zero-variance distance population).
class degenerate_input_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// DET requested on a recurrence plot with no off-LOI recurrence points.
// Surfaced distinctly so sliding-window analyses can record the window as
// missing instead of failing.
class undefined_det_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Surrogate segment redraw hit the iteration cap. Carries the index of the
// failing segment (npos when generated outside a segmentation context).
class convergence_error : public std::runtime_error {
 public:
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

  convergence_error(const std::string& what, std::size_t segment_index)
      : std::runtime_error(what), segment_index_(segment_index) {}

  std::size_t segment_index() const noexcept { return segment_index_; }

 private:
  std::size_t segment_index_;
};

// File-format and filesystem failures in the io layer.
class io_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace mrqa

#endif  // MRQA_ERRORS_HPP
