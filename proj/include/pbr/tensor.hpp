#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <vector>

namespace pbr {

// Dense tensor of 64-bit floats, row-major.
//
// Layout convention used by the model code: a sentence representation is a
// (d x n) matrix whose columns are token vectors. Column j of a row-major
// (r x c) tensor is the strided slice data[j], data[c + j], ...
//
// Tensor is a cheap handle; copies share the underlying buffers. The grad
// buffer exists iff requires_grad is set and always matches data in length.
class Tensor {
 public:
  Tensor() = default;

  static Tensor zeros(std::vector<int> shape, bool requires_grad = false);
  static Tensor full(std::vector<int> shape, double value,
                     bool requires_grad = false);
  static Tensor from(std::vector<int> shape, std::vector<double> values,
                     bool requires_grad = false);
  static Tensor scalar(double value, bool requires_grad = false);

  bool defined() const { return static_cast<bool>(data_); }
  const std::vector<int>& shape() const { return shape_; }
  int rank() const { return static_cast<int>(shape_.size()); }
  std::size_t numel() const { return data_ ? data_->size() : 0; }
  int rows() const;
  int cols() const;

  std::vector<double>& data() { return *data_; }
  const std::vector<double>& data() const { return *data_; }
  std::vector<double>& grad();
  const std::vector<double>& grad() const;
  bool requires_grad() const { return requires_grad_; }

  double value() const;  // scalar (single-element) tensors only
  double at(int i) const;
  double at(int r, int c) const;
  double& at(int i);
  double& at(int r, int c);

  void zero_grad();
  bool all_finite() const;

  // Identity of the underlying buffer; used to key optimizer state.
  const void* id() const { return data_.get(); }

 private:
  std::vector<int> shape_;
  std::shared_ptr<std::vector<double>> data_;
  std::shared_ptr<std::vector<double>> grad_;
  bool requires_grad_ = false;
};

// Records the backward steps of one forward pass; backward() replays them in
// reverse. A tape is single-threaded and single-use (one backward call).
// Independent tapes may run concurrently against shared frozen parameters.
// A non-recording tape skips all bookkeeping, used for inference.
class Tape {
 public:
  explicit Tape(bool recording = true) : recording_(recording) {}
  Tape(const Tape&) = delete;
  Tape& operator=(const Tape&) = delete;

  bool recording() const { return recording_; }
  void record(std::function<void()> step);
  void backward(const Tensor& loss);
  std::size_t size() const { return steps_.size(); }

 private:
  bool recording_ = true;
  bool consumed_ = false;
  std::vector<std::function<void()>> steps_;
};

// ---------------------------------------------------------------------------
// Operations. Each validates shapes, computes the forward value, and, when the
// tape is recording and some input requires grad, records the backward step
// that accumulates into the inputs' grad buffers.
// ---------------------------------------------------------------------------

// (m x k) . (k x n) -> (m x n); a rank-1 right operand of length k is treated
// as a column, yielding a rank-1 result of length m.
Tensor matmul(Tape& tape, const Tensor& a, const Tensor& b);

Tensor transpose(Tape& tape, const Tensor& a);

Tensor add(Tape& tape, const Tensor& a, const Tensor& b);
Tensor sub(Tape& tape, const Tensor& a, const Tensor& b);
Tensor mul(Tape& tape, const Tensor& a, const Tensor& b);
Tensor scale(Tape& tape, const Tensor& a, double factor);

// mat (r x c) + vec (r) applied to every column.
Tensor add_col_broadcast(Tape& tape, const Tensor& mat, const Tensor& vec);

Tensor sigmoid(Tape& tape, const Tensor& a);
Tensor tanh_op(Tape& tape, const Tensor& a);
Tensor relu(Tape& tape, const Tensor& a);
Tensor abs_op(Tape& tape, const Tensor& a);

// Rank-1 softmax, stabilized by max subtraction. Entries of -inf act as mask
// sentinels and map to exactly 0. All entries -inf is a degenerate mask.
Tensor softmax(Tape& tape, const Tensor& x);

// Softmax over the visible subset; positions with visible[j] == 0 get exactly
// 0 without ever materializing -inf logits.
Tensor masked_softmax(Tape& tape, const Tensor& x,
                      const std::vector<std::uint8_t>& visible);

// Independent softmax down each column of a rank-2 tensor.
Tensor softmax_columns(Tape& tape, const Tensor& x);

// Normalizes x (rank-1, length d) to mean 0 / variance 1 with eps = 1e-5
// inside the square root, then applies gain and bias.
Tensor layer_norm(Tape& tape, const Tensor& x, const Tensor& gain,
                  const Tensor& bias);

// layer_norm applied to every column of a (d x n) tensor; gain and bias are
// shared across columns.
Tensor layer_norm_columns(Tape& tape, const Tensor& x, const Tensor& gain,
                          const Tensor& bias);

// Gathers rows of table (V x d) as columns: out (d x n), out[:, j] =
// table[ids[j], :]. Backward scatter-adds into the gathered rows.
Tensor lookup(Tape& tape, const Tensor& table, const std::vector<int>& ids);

Tensor concat(Tape& tape, const std::vector<Tensor>& parts);  // rank-1 parts
Tensor vstack(Tape& tape, const std::vector<Tensor>& parts);  // rank-2, equal cols

Tensor sum_all(Tape& tape, const Tensor& a);
Tensor mean_of(Tape& tape, const std::vector<Tensor>& scalars);

// Debug-mode validity sweep: when enabled, every op checks its output for
// NaN/Inf and throws EvalError. Off by default.
void set_debug_validity_checks(bool enabled);
bool debug_validity_checks();

}  // namespace pbr
