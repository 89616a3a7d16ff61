#include "gstrata/matrix.hpp"

#include <sstream>
#include <utility>

#include "gstrata/error.hpp"

namespace gstrata {

namespace {

void require_same_field(const Matrix& a, const Matrix& b) {
  if (a.field() != b.field())
    throw Error(ErrorCode::MixedField, a.field().name() + " vs " + b.field().name());
}

// In-place reduced row echelon form over F_p on a row-major buffer.
std::vector<std::size_t> rref_modp(std::vector<std::uint32_t>& a, std::size_t rows,
                                   std::size_t cols, std::uint32_t p) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t sel = r;
    while (sel < rows && a[sel * cols + c] == 0) ++sel;
    if (sel == rows) continue;
    if (sel != r)
      for (std::size_t j = 0; j < cols; ++j) std::swap(a[sel * cols + j], a[r * cols + j]);
    const std::uint32_t inv = modp::inverse(a[r * cols + c], p);
    for (std::size_t j = c; j < cols; ++j) a[r * cols + j] = modp::mul(a[r * cols + j], inv, p);
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r) continue;
      const std::uint32_t f = a[i * cols + c];
      if (f == 0) continue;
      for (std::size_t j = c; j < cols; ++j)
        a[i * cols + j] = modp::sub(a[i * cols + j], modp::mul(f, a[r * cols + j], p), p);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

std::vector<std::size_t> rref_rational(std::vector<Scalar>& a, std::size_t rows,
                                       std::size_t cols) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t sel = r;
    while (sel < rows && sgn(a[sel * cols + c]) == 0) ++sel;
    if (sel == rows) continue;
    if (sel != r)
      for (std::size_t j = 0; j < cols; ++j) swap(a[sel * cols + j], a[r * cols + j]);
    const Scalar inv = 1 / a[r * cols + c];
    for (std::size_t j = c; j < cols; ++j) a[r * cols + j] *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || sgn(a[i * cols + c]) == 0) continue;
      const Scalar f = a[i * cols + c];
      for (std::size_t j = c; j < cols; ++j) a[i * cols + j] -= f * a[r * cols + j];
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace

Matrix::Matrix(FieldSpec field, std::size_t rows, std::size_t cols)
    : field_(field), rows_(rows), cols_(cols), data_(rows * cols) {}

Matrix::Matrix(FieldSpec field, std::size_t rows, std::size_t cols, std::vector<Scalar> entries)
    : field_(field), rows_(rows), cols_(cols), data_(std::move(entries)) {
  if (data_.size() != rows * cols)
    throw Error(ErrorCode::ShapeMismatch, "entry count does not match " +
                                              std::to_string(rows) + "x" + std::to_string(cols));
  for (auto& e : data_) e = field_.normalize(e);
}

Matrix Matrix::identity(FieldSpec field, std::size_t n) {
  Matrix m(field, n, n);
  for (std::size_t i = 0; i < n; ++i) m.data_[i * n + i] = 1;
  return m;
}

Matrix Matrix::from_ints(FieldSpec field, std::size_t rows, std::size_t cols,
                         std::span<const long> entries) {
  std::vector<Scalar> data;
  data.reserve(entries.size());
  for (long v : entries) data.emplace_back(v);
  return Matrix(field, rows, cols, std::move(data));
}

bool Matrix::is_zero() const {
  for (const auto& e : data_)
    if (sgn(e) != 0) return false;
  return true;
}

Matrix Matrix::transpose() const {
  Matrix t(field_, cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t.data_[c * rows_ + r] = data_[r * cols_ + c];
  return t;
}

Matrix Matrix::column_block(std::size_t first, std::size_t count) const {
  if (first + count > cols_) throw Error(ErrorCode::ShapeMismatch, "column block out of range");
  Matrix b(field_, rows_, count);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < count; ++c) b.data_[r * count + c] = data_[r * cols_ + first + c];
  return b;
}

Matrix Matrix::row_block(std::size_t first, std::size_t count) const {
  if (first + count > rows_) throw Error(ErrorCode::ShapeMismatch, "row block out of range");
  Matrix b(field_, count, cols_);
  std::copy(data_.begin() + static_cast<std::ptrdiff_t>(first * cols_),
            data_.begin() + static_cast<std::ptrdiff_t>((first + count) * cols_), b.data_.begin());
  return b;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  require_same_field(a, b);
  if (a.cols_ != b.rows_) throw Error(ErrorCode::ShapeMismatch, "product shape mismatch");
  Matrix out(a.field_, a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Scalar& f = a.data_[i * a.cols_ + k];
      if (sgn(f) == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) out.data_[i * b.cols_ + j] += f * b.data_[k * b.cols_ + j];
    }
  for (auto& e : out.data_) e = out.field_.normalize(e);
  return out;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
  require_same_field(a, b);
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw Error(ErrorCode::ShapeMismatch, "sum shape mismatch");
  Matrix out(a);
  for (std::size_t i = 0; i < out.data_.size(); ++i)
    out.data_[i] = out.field_.normalize(a.data_[i] + b.data_[i]);
  return out;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
  require_same_field(a, b);
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw Error(ErrorCode::ShapeMismatch, "difference shape mismatch");
  Matrix out(a);
  for (std::size_t i = 0; i < out.data_.size(); ++i)
    out.data_[i] = out.field_.normalize(a.data_[i] - b.data_[i]);
  return out;
}

bool Matrix::operator==(const Matrix& other) const {
  return field_ == other.field_ && rows_ == other.rows_ && cols_ == other.cols_ && data_ == other.data_;
}

std::string Matrix::to_string() const {
  std::ostringstream os;
  os << "[";
  for (std::size_t r = 0; r < rows_; ++r) {
    os << (r ? ", [" : "[");
    for (std::size_t c = 0; c < cols_; ++c) os << (c ? ", " : "") << data_[r * cols_ + c].get_str();
    os << "]";
  }
  os << "] over " << field_.name();
  return os.str();
}

Matrix hconcat(std::span<const Matrix> blocks) {
  if (blocks.empty()) return Matrix();
  const std::size_t rows = blocks.front().rows();
  std::size_t cols = 0;
  for (const auto& b : blocks) {
    if (b.rows() != rows) throw Error(ErrorCode::MixedAmbient, "blocks differ in row count");
    if (b.field() != blocks.front().field())
      throw Error(ErrorCode::MixedField, "blocks differ in field");
    cols += b.cols();
  }
  std::vector<Scalar> data(rows * cols);
  std::size_t offset = 0;
  for (const auto& b : blocks) {
    for (std::size_t r = 0; r < rows; ++r)
      for (std::size_t c = 0; c < b.cols(); ++c) data[r * cols + offset + c] = b(r, c);
    offset += b.cols();
  }
  return Matrix(blocks.front().field(), rows, cols, std::move(data));
}

Matrix vconcat(std::span<const Matrix> blocks) {
  std::vector<Matrix> transposed;
  transposed.reserve(blocks.size());
  for (const auto& b : blocks) transposed.push_back(b.transpose());
  return hconcat(transposed).transpose();
}

RrefResult rref(const Matrix& m) {
  const std::size_t rows = m.rows(), cols = m.cols();
  if (m.field().is_prime_field()) {
    const std::uint32_t p = m.field().modulus();
    std::vector<std::uint32_t> buf(rows * cols);
    for (std::size_t i = 0; i < buf.size(); ++i)
      buf[i] = static_cast<std::uint32_t>(m.entries()[i].get_num().get_ui());
    auto pivots = rref_modp(buf, rows, cols, p);
    std::vector<Scalar> data(buf.begin(), buf.end());
    return {Matrix(m.field(), rows, cols, std::move(data)), std::move(pivots)};
  }
  std::vector<Scalar> buf = m.entries();
  auto pivots = rref_rational(buf, rows, cols);
  return {Matrix(m.field(), rows, cols, std::move(buf)), std::move(pivots)};
}

std::size_t rank(const Matrix& m) { return rref(m).pivots.size(); }

Matrix canonical_column_basis(const Matrix& m) {
  auto [reduced, pivots] = rref(m.transpose());
  return reduced.row_block(0, pivots.size()).transpose();
}

Matrix kernel(const Matrix& m) {
  const std::size_t cols = m.cols();
  auto [reduced, pivots] = rref(m);
  std::vector<bool> is_pivot(cols, false);
  for (auto c : pivots) is_pivot[c] = true;
  std::vector<Matrix> basis;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    std::vector<Scalar> v(cols);
    v[free] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -reduced(r, free);
    basis.emplace_back(m.field(), cols, 1, std::move(v));
  }
  if (basis.empty()) return Matrix(m.field(), cols, 0);
  return canonical_column_basis(hconcat(basis));
}

Matrix inverse(const Matrix& m) {
  if (m.rows() != m.cols()) throw Error(ErrorCode::ShapeMismatch, "inverse of non-square matrix");
  const std::size_t n = m.rows();
  const Matrix blocks[] = {m, Matrix::identity(m.field(), n)};
  auto [reduced, pivots] = rref(hconcat(blocks));
  if (pivots.size() < n || (n > 0 && pivots[n - 1] != n - 1))
    throw Error(ErrorCode::RankDeficient, "matrix is singular");
  return reduced.column_block(n, n);
}

namespace {

void check_spans(std::span<const Matrix> spans) {
  if (spans.empty()) throw Error(ErrorCode::InvalidArgument, "no subspaces given");
  for (const auto& s : spans) {
    if (s.rows() != spans.front().rows()) throw Error(ErrorCode::MixedAmbient, "ambient dimensions differ");
    if (s.field() != spans.front().field()) throw Error(ErrorCode::MixedField, "fields differ");
  }
}

}  // namespace

Matrix column_span_sum(std::span<const Matrix> spans) {
  check_spans(spans);
  return canonical_column_basis(hconcat(spans));
}

Matrix column_span_intersection(std::span<const Matrix> spans) {
  check_spans(spans);
  // The intersection of the spans is the annihilator of the sum of their
  // annihilators; annihilators are kernels of transposes.
  std::vector<Matrix> annihilators;
  annihilators.reserve(spans.size());
  for (const auto& s : spans) annihilators.push_back(kernel(s.transpose()));
  return kernel(hconcat(annihilators).transpose());
}

}  // namespace gstrata
