// Destinations for generated proof lines. Generators stream into a sink so
// that large proofs never have to be held in memory.

#pragma once

#include <cstddef>
#include <ostream>
#include <span>
#include <string>

#include "pigeon/clause.hpp"

namespace pigeon {

class ProofSink {
 public:
  virtual ~ProofSink() = default;
  virtual void add(std::span<const Literal> clause) = 0;
  virtual void remove(std::span<const Literal> clause) = 0;

  void add(std::initializer_list<Literal> clause) { add(std::span(clause.begin(), clause.size())); }
};

class ProofCollector final : public ProofSink {
 public:
  void add(std::span<const Literal> clause) override;
  void remove(std::span<const Literal> clause) override;
  using ProofSink::add;

  const Proof& proof() const { return proof_; }
  Proof take() { return std::move(proof_); }

 private:
  Proof proof_;
};

// Writes text DRAT, buffered. Call flush() or let the destructor do it.
class DratWriter final : public ProofSink {
 public:
  explicit DratWriter(std::ostream& out) : out_(out) {}
  ~DratWriter() override { flush(); }
  DratWriter(const DratWriter&) = delete;
  DratWriter& operator=(const DratWriter&) = delete;

  void add(std::span<const Literal> clause) override;
  void remove(std::span<const Literal> clause) override;
  using ProofSink::add;
  void flush();

 private:
  void maybe_flush();
  std::ostream& out_;
  std::string buffer_;
};

class LineCounter final : public ProofSink {
 public:
  void add(std::span<const Literal>) override { ++added_; }
  void remove(std::span<const Literal>) override { ++deleted_; }
  using ProofSink::add;

  std::size_t added() const { return added_; }
  std::size_t deleted() const { return deleted_; }

 private:
  std::size_t added_ = 0;
  std::size_t deleted_ = 0;
};

// Turns every addition into a deletion of the same clause on `target`.
class DeletingSink final : public ProofSink {
 public:
  explicit DeletingSink(ProofSink& target) : target_(target) {}
  void add(std::span<const Literal> clause) override { target_.remove(clause); }
  void remove(std::span<const Literal>) override {}
  using ProofSink::add;

 private:
  ProofSink& target_;
};

}  // namespace pigeon
