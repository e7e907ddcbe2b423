#pragma once

#include <string>
#include <vector>

#include "roundsleek/rational.hpp"

namespace roundsleek {

// A point of some metric space. Scalar and Vector cover subsets of R and R^n,
// Label covers finite labeled spaces, Tuple covers finite products, and Seq
// covers countable products as a trimmed prefix: coordinates past the stored
// children sit at the owning space's basepoint.
class Point {
public:
    enum class Kind { Scalar, Vector, Label, Tuple, Seq };

    static Point scalar(Rat v);
    static Point vec(std::vector<Rat> coords);
    static Point label(std::string name);
    static Point tuple(std::vector<Point> parts);
    static Point seq(std::vector<Point> prefix);

    Kind kind() const { return kind_; }
    const Rat& as_scalar() const;
    const std::vector<Rat>& as_vector() const;
    const std::string& as_label() const;
    const std::vector<Point>& children() const;

    bool operator==(const Point& o) const;
    bool operator!=(const Point& o) const { return !(*this == o); }
    bool operator<(const Point& o) const;  // total order, used for dedup only

    std::string str() const;

private:
    Kind kind_ = Kind::Scalar;
    Rat scalar_;
    std::vector<Rat> coords_;
    std::string label_;
    std::vector<Point> kids_;
};

}  // namespace roundsleek
