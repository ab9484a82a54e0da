#include <gtest/gtest.h>

#include "chowkit/catalog.hpp"
#include "chowkit/ring_document.hpp"

using namespace chowkit;

TEST(RingDocument, RoundTripIsBitExact) {
  for (const char* label : {"P1", "P5", "P1^4", "G26", "Gw36", "B", "FB", "I", "Pi", "pt"}) {
    auto R = catalog(label);
    const std::string doc = export_ring(*R);
    auto back = import_ring(doc);
    EXPECT_EQ(export_ring(*back), doc) << label;
    EXPECT_EQ(back->hilbert_function(), R->hilbert_function()) << label;
    EXPECT_EQ(back->integrate(back->top_class()), R->integrate(R->top_class())) << label;
  }
}

TEST(RingDocument, ExportShape) {
  const std::string doc = export_ring(*catalog("P5"));
  EXPECT_EQ(doc,
            "ring P5\n"
            "dimension 5\n"
            "variables H:1\n"
            "relation H^6\n"
            "top H^5\n"
            "normalization 1\n"
            "tangent (5, [6*H, 15*H^2, 20*H^3, 15*H^4, 6*H^5])\n"
            "end\n");
}

TEST(RingDocument, ImportHandWritten) {
  auto R = import_ring(
      "ring quadric surface\n"
      "dimension 2\n"
      "variables a:1 b:1\n"
      "relation a^2\n"
      "relation b^2\n"
      "top a*b\n"
      "normalization 2\n"
      "end\n");
  EXPECT_EQ(R->label(), "quadric surface");
  EXPECT_EQ(R->integrate(R->parse("(a+b)^2")), 4);
}

TEST(RingDocument, ErrorsNameTheLine) {
  const char* bad_expr =
      "ring x\ndimension 1\nvariables t:1\nrelation t^2+u\ntop t\nnormalization 1\nend\n";
  try {
    import_ring(bad_expr);
    FAIL();
  } catch (const DomainError& e) {
    EXPECT_NE(std::string(e.what()).find("line 4"), std::string::npos) << e.what();
  }
  EXPECT_THROW(import_ring("ring x\ndimension 1\nvariables t:1\ntop t\nnormalization 1\n"), DomainError);
  EXPECT_THROW(import_ring("ring x\ndimension 1\nvariables t:0\ntop t\nend\n"), DomainError);
  EXPECT_THROW(import_ring("ring x\ndimension 1\nvariables t:1\nbogus 3\ntop t\nend\n"), DomainError);
  // Top piece not one-dimensional.
  EXPECT_THROW(import_ring("ring x\ndimension 1\nvariables s:1 t:1\nrelation s^2\nrelation t^2\ntop t\nend\n"),
               DomainError);
}
