#include <gtest/gtest.h>

#include "pigeon/dimacs.hpp"
#include "pigeon/drat_io.hpp"
#include "pigeon/encodings.hpp"
#include "pigeon/proof_cook.hpp"
#include "pigeon/proof_ours.hpp"

namespace pigeon {
namespace {

TEST(LiteralTest, ZeroIsRejected) { EXPECT_THROW(Literal(0), std::invalid_argument); }

TEST(LiteralTest, ComplementIsAnInvolution) {
  for (std::int64_t v : std::vector<std::int64_t>{1, -1, 7, -42, std::int64_t{1} << 40}) {
    Literal l(v);
    EXPECT_EQ(~~l, l);
    EXPECT_EQ((~l).var(), l.var());
    EXPECT_NE(~l, l);
  }
}

TEST(ClauseTest, KeepsConstructionOrder) {
  Clause c{-3, 1, 2};
  ASSERT_EQ(c.size(), 3u);
  EXPECT_EQ(c[0], Literal(-3));
  EXPECT_EQ(c[1], Literal(1));
  EXPECT_EQ(c[2], Literal(2));
}

TEST(ClauseTest, DuplicateLiteralsAreRejected) {
  EXPECT_THROW((Clause{1, 2, 1}), std::invalid_argument);
  std::vector<Literal> many;
  for (int i = 1; i <= 20; ++i) many.emplace_back(i);
  many.emplace_back(13);
  EXPECT_THROW(Clause{many}, std::invalid_argument);
}

TEST(ClauseTest, TautologyAndMultisetEquality) {
  EXPECT_TRUE((Clause{1, -2, 2}).is_tautology());
  EXPECT_FALSE((Clause{1, -2}).is_tautology());
  EXPECT_TRUE((Clause{1, -2, 3}).same_literals(Clause{3, 1, -2}));
  EXPECT_FALSE((Clause{1, -2, 3}).same_literals(Clause{3, 1, 2}));
  EXPECT_TRUE(Clause{}.empty());
}

TEST(ParseDimacsTest, MinimalInput) {
  auto f = parse_dimacs("p cnf 2 1\n1 -2 0\n");
  EXPECT_EQ(f.num_vars, 2);
  ASSERT_EQ(f.clauses.size(), 1u);
  EXPECT_EQ(f.clauses[0], (Clause{1, -2}));
}

TEST(ParseDimacsTest, CommentsAndClausesSpanningLines) {
  auto f = parse_dimacs("c a comment\np cnf 3 2\n1 2\n 3 0 -1\nc inner\n0\n");
  ASSERT_EQ(f.clauses.size(), 2u);
  EXPECT_EQ(f.clauses[0], (Clause{1, 2, 3}));
  EXPECT_EQ(f.clauses[1], (Clause{-1}));
}

TEST(ParseDimacsTest, LiteralOutOfRange) {
  try {
    parse_dimacs("p cnf 1 1\n2 0\n");
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 2u);
    EXPECT_NE(std::string(e.what()).find("out of declared range"), std::string::npos);
  }
}

TEST(ParseDimacsTest, MalformedInputs) {
  EXPECT_THROW(parse_dimacs("p cnf x 1\n1 0\n"), ParseError);
  EXPECT_THROW(parse_dimacs("p dnf 1 1\n1 0\n"), ParseError);
  EXPECT_THROW(parse_dimacs("p cnf 1 1 7\n1 0\n"), ParseError);
  EXPECT_THROW(parse_dimacs("1 0\n"), ParseError);
  EXPECT_THROW(parse_dimacs("p cnf 2 1\n1 2\n"), ParseError);
  EXPECT_THROW(parse_dimacs("p cnf 2 1\n1 1 0\n"), ParseError);
  EXPECT_THROW(parse_dimacs("p cnf 2 1\n1 a 0\n"), ParseError);
  EXPECT_THROW(parse_dimacs("c only a comment\n"), ParseError);
}

TEST(ParseDimacsTest, ClauseCountMismatchIsAWarning) {
  std::vector<std::string> warnings;
  auto f = parse_dimacs("p cnf 2 3\n1 0\n2 0\n", &warnings);
  EXPECT_EQ(f.clauses.size(), 2u);
  ASSERT_EQ(warnings.size(), 1u);
  EXPECT_NE(warnings[0].find("declares 3"), std::string::npos);
}

TEST(ParseDimacsTest, TautologicalClausesAreAccepted) {
  auto f = parse_dimacs("p cnf 2 1\n1 -1 2 0\n");
  EXPECT_TRUE(f.clauses[0].is_tautology());
}

TEST(EmitDimacsTest, EmptyFormula) { EXPECT_EQ(emit_dimacs(CnfFormula{}), "p cnf 0 0\n"); }

TEST(EmitDimacsTest, PreservesLiteralOrder) {
  CnfFormula f{3, {Clause{-3, 1}}};
  EXPECT_EQ(emit_dimacs(f), "p cnf 3 1\n-3 1 0\n");
}

TEST(EmitDimacsTest, EmptyClauseLine) {
  CnfFormula f{1, {Clause{}}};
  EXPECT_EQ(emit_dimacs(f), "p cnf 1 1\n0\n");
  EXPECT_EQ(parse_dimacs(emit_dimacs(f)), f);
}

TEST(DimacsRoundTripTest, GeneratedFormulas) {
  for (int n = 1; n <= 12; ++n) {
    for (const auto& f : {php_standard(n), php_amo(n)}) {
      const auto text = emit_dimacs(f);
      EXPECT_EQ(parse_dimacs(text), f) << "n=" << n;
      EXPECT_EQ(emit_dimacs(parse_dimacs(text)), text) << "n=" << n;
    }
  }
}

TEST(ParseDratTest, AdditionsDeletionsAndEmptyClause) {
  auto p = parse_drat("1 2 0\nd 1 2 0\n0\n");
  ASSERT_EQ(p.lines.size(), 3u);
  EXPECT_EQ(p.lines[0], ProofLine::add(Clause{1, 2}));
  EXPECT_EQ(p.lines[1], ProofLine::remove(Clause{1, 2}));
  EXPECT_EQ(p.lines[2], ProofLine::add(Clause{}));
  EXPECT_TRUE(p.is_complete());
  EXPECT_EQ(p.added_count(), 2u);
  EXPECT_EQ(p.deleted_count(), 1u);
}

TEST(ParseDratTest, PivotPositionIsPreserved) {
  auto p = parse_drat("-5 3 1 0\n");
  EXPECT_EQ(p.lines[0].clause[0], Literal(-5));
}

TEST(ParseDratTest, Errors) {
  EXPECT_THROW(parse_drat("d 0\n"), ParseError);
  EXPECT_THROW(parse_drat("1 2\n"), ParseError);
  EXPECT_THROW(parse_drat("1 2 0 3\n"), ParseError);
  EXPECT_THROW(parse_drat("1 -1 1 0\n"), ParseError);
  EXPECT_THROW(parse_drat("1 x 0\n"), ParseError);
  try {
    parse_drat("1 0\n\n2 3\n");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 3u);
  }
}

TEST(EmitDratTest, EmptyClauseOnly) {
  Proof p{{ProofLine::add(Clause{})}};
  EXPECT_EQ(emit_drat(p), "0\n");
}

TEST(EmitDratTest, DeletionOfEmptyClauseIsNeverWritten) {
  Proof p{{ProofLine::remove(Clause{})}};
  EXPECT_THROW(emit_drat(p), std::logic_error);
}

TEST(EmitDratTest, SmallestProof) {
  const auto text = emit_drat(generate_ours(2));
  EXPECT_EQ(std::count(text.begin(), text.end(), '\n'), 10);
  EXPECT_TRUE(text.ends_with("\n0\n"));
}

TEST(DratRoundTripTest, GeneratedProofs) {
  for (int n = 2; n <= 9; ++n) {
    for (bool deletions : {false, true}) {
      for (const auto& p : {generate_ours(n, {deletions}), generate_cook(n, {deletions})}) {
        const auto text = emit_drat(p);
        EXPECT_EQ(parse_drat(text), p) << "n=" << n;
        EXPECT_EQ(emit_drat(parse_drat(text)), text) << "n=" << n;
      }
    }
  }
}

TEST(DratReaderTest, SkipsBlankAndCommentLines) {
  std::istringstream in("c header\n\n1 0\n   \nd 1 0\n");
  DratReader reader(in);
  auto a = reader.next();
  ASSERT_TRUE(a);
  EXPECT_EQ(reader.physical_line(), 3u);
  auto b = reader.next();
  ASSERT_TRUE(b);
  EXPECT_EQ(b->kind, LineKind::kDelete);
  EXPECT_FALSE(reader.next());
}

}  // namespace
}  // namespace pigeon
