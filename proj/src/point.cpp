#include "roundsleek/point.hpp"

#include <sstream>

#include "roundsleek/errors.hpp"

namespace roundsleek {

Point Point::scalar(Rat v) {
    Point p;
    p.kind_ = Kind::Scalar;
    p.scalar_ = std::move(v);
    return p;
}

Point Point::vec(std::vector<Rat> coords) {
    Point p;
    p.kind_ = Kind::Vector;
    p.coords_ = std::move(coords);
    return p;
}

Point Point::label(std::string name) {
    Point p;
    p.kind_ = Kind::Label;
    p.label_ = std::move(name);
    return p;
}

Point Point::tuple(std::vector<Point> parts) {
    Point p;
    p.kind_ = Kind::Tuple;
    p.kids_ = std::move(parts);
    return p;
}

Point Point::seq(std::vector<Point> prefix) {
    Point p;
    p.kind_ = Kind::Seq;
    p.kids_ = std::move(prefix);
    return p;
}

const Rat& Point::as_scalar() const {
    if (kind_ != Kind::Scalar) throw DomainMismatch("point is not a scalar");
    return scalar_;
}

const std::vector<Rat>& Point::as_vector() const {
    if (kind_ != Kind::Vector) throw DomainMismatch("point is not a coordinate vector");
    return coords_;
}

const std::string& Point::as_label() const {
    if (kind_ != Kind::Label) throw DomainMismatch("point is not a label");
    return label_;
}

const std::vector<Point>& Point::children() const {
    if (kind_ != Kind::Tuple && kind_ != Kind::Seq)
        throw DomainMismatch("point has no components");
    return kids_;
}

bool Point::operator==(const Point& o) const {
    if (kind_ != o.kind_) return false;
    switch (kind_) {
        case Kind::Scalar: return scalar_ == o.scalar_;
        case Kind::Vector: return coords_ == o.coords_;
        case Kind::Label: return label_ == o.label_;
        case Kind::Tuple:
        case Kind::Seq: return kids_ == o.kids_;
    }
    return false;
}

bool Point::operator<(const Point& o) const {
    if (kind_ != o.kind_) return static_cast<int>(kind_) < static_cast<int>(o.kind_);
    switch (kind_) {
        case Kind::Scalar: return scalar_ < o.scalar_;
        case Kind::Vector: return coords_ < o.coords_;
        case Kind::Label: return label_ < o.label_;
        case Kind::Tuple:
        case Kind::Seq: return kids_ < o.kids_;
    }
    return false;
}

std::string Point::str() const {
    switch (kind_) {
        case Kind::Scalar: return rat_str(scalar_);
        case Kind::Label: return label_;
        case Kind::Vector: {
            std::ostringstream out;
            out << "(";
            for (size_t i = 0; i < coords_.size(); ++i) {
                if (i) out << ", ";
                out << rat_str(coords_[i]);
            }
            out << ")";
            return out.str();
        }
        case Kind::Tuple:
        case Kind::Seq: {
            std::ostringstream out;
            out << "(";
            for (size_t i = 0; i < kids_.size(); ++i) {
                if (i) out << ", ";
                out << kids_[i].str();
            }
            if (kind_ == Kind::Seq) out << ", ...";
            out << ")";
            return out.str();
        }
    }
    return "";
}

}  // namespace roundsleek
