#pragma once

#include <string>
#include <vector>

#include "leibniz/exactla.hpp"

namespace leibniz {

struct Violation {
  std::string axiom;
  std::vector<Index> indices;  // basis indices of the failing tuple
  Vector residual;             // empty when the failure is not an equation
  std::string note;
};

class Report {
 public:
  Report() = default;
  explicit Report(std::string subject) : subject_(std::move(subject)) {}

  const std::string& subject() const { return subject_; }
  const std::vector<Violation>& failures() const { return failures_; }
  std::size_t checked() const { return checked_; }
  bool passed() const { return failures_.empty(); }
  explicit operator bool() const { return passed(); }

  // Records one evaluated instance; a nonzero residual is a failure.
  template <typename Derived>
  void expect_zero(const std::string& axiom, std::vector<Index> indices, const Eigen::MatrixBase<Derived>& residual,
                   const std::string& note = {}) {
    ++checked_;
    if (!is_zero(residual)) failures_.push_back({axiom, std::move(indices), Vector(residual), note});
  }
  template <typename A, typename B>
  void expect_equal(const std::string& axiom, std::vector<Index> indices, const Eigen::MatrixBase<A>& lhs,
                    const Eigen::MatrixBase<B>& rhs) {
    if (lhs.rows() != rhs.rows() || lhs.cols() != rhs.cols()) {
      ++checked_;
      failures_.push_back({axiom, std::move(indices), {}, "shape mismatch"});
      return;
    }
    Matrix diff = lhs - rhs;
    expect_zero(axiom, std::move(indices), Eigen::Map<const Vector>(diff.data(), diff.size()));
  }
  void expect(const std::string& axiom, bool ok, const std::string& note = {}) {
    ++checked_;
    if (!ok) failures_.push_back({axiom, {}, {}, note});
  }
  void fail(const std::string& axiom, const std::string& note, std::vector<Index> indices = {}) {
    ++checked_;
    failures_.push_back({axiom, std::move(indices), {}, note});
  }

  // Appends other's failures with their axiom tags prefixed by prefix.
  Report& merge(const Report& other, const std::string& prefix = {}) {
    checked_ += other.checked_;
    for (const auto& v : other.failures_) {
      failures_.push_back(v);
      if (!prefix.empty()) failures_.back().axiom = prefix + "/" + v.axiom;
    }
    return *this;
  }

  bool has_failure(const std::string& axiom) const {
    for (const auto& v : failures_)
      if (v.axiom == axiom) return true;
    return false;
  }

  std::string summary() const;

 private:
  std::string subject_;
  std::vector<Violation> failures_;
  std::size_t checked_ = 0;
};

}  // namespace leibniz
