#include "coarse/partition.hpp"

#include <algorithm>
#include <type_traits>

#include "coarse/errors.hpp"
#include "search.hpp"

namespace coarse {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

Integer fib(std::uint64_t n) {
  Integer f;
  mpz_fib_ui(f.get_mpz_t(), n);
  return f;
}

CellIndex to_index(const Integer& i) {
  if (i < 1 || !i.fits_ulong_p()) {
    throw RangeError("cell index out of representable range: " + i.get_str());
  }
  return i.get_ui();
}

// Upper bound of cell i of the epsilon family:
// 1/2 + (2 + 3 + ... + i) / eps = 1/2 + (i(i+1)/2 - 1) / eps.
Number epsilon_upper(const Number& eps, CellIndex i) {
  Integer n(static_cast<unsigned long>(i));
  Integer tri = n * (n + 1) / 2 - 1;
  return Number(1, 2) + Number(tri) / eps;
}

Cell int_cell(CellIndex i, Integer lo, Integer hi) {
  return Cell{i, Number(lo), Number(hi), true, true, Domain::Integers};
}

std::string short_form(const Number& x) {
  return is_integer(x) ? x.get_num().get_str() : x.get_str();
}

}  // namespace

bool Cell::contains(const Number& x) const {
  if (domain == Domain::Integers && !is_integer(x)) return false;
  bool above = lower_closed ? x >= lower : x > lower;
  bool below = upper_closed ? x <= upper : x < upper;
  return above && below;
}

Integer Cell::size() const {
  if (domain != Domain::Integers) {
    throw DomainError("size() is defined for integer cells only");
  }
  return floor(upper) - floor(lower) + 1;
}

Partition::Partition(PartitionSpec spec) : spec_(std::move(spec)) {
  const Domain domain = spec_.domain;
  auto require_integers = [&](const char* kind) {
    if (domain != Domain::Integers) {
      throw SpecError(std::string(kind) + " requires the integer domain");
    }
  };
  auto require_integral = [&](const Number& x, const std::string& field) {
    if (domain == Domain::Integers && !is_integer(x)) {
      throw SpecError(field + " must be an integer in the integer domain, got " + x.get_str());
    }
  };

  std::visit(
      overloaded{
          [&](const FixedWidth& k) {
            require_integers("fixed_width");
            if (k.width == 0) throw SpecError("width must be positive");
          },
          [&](const Fibonacci&) { require_integers("fibonacci"); },
          [&](const WidthList& k) {
            require_integers("widths");
            if (k.widths.empty()) throw SpecError("widths must not be empty");
            Integer start = 0;
            for (std::size_t j = 0; j < k.widths.size(); ++j) {
              if (k.widths[j] == 0) {
                throw SpecError("widths[" + std::to_string(j) + "] must be positive");
              }
              Integer end = start + static_cast<unsigned long>(k.widths[j]);
              finite_cells_.push_back(int_cell(j + 1, start, end - 1));
              start = end;
            }
          },
          [&](const EpsilonGrowth& k) {
            if (domain != Domain::Reals) throw SpecError("epsilon requires the real domain");
            if (k.epsilon <= 0) throw SpecError("epsilon must be positive");
          },
          [&](const ExplicitBounds& k) {
            const auto& b = k.boundaries;
            if (b.size() < 2) throw SpecError("bounds needs at least two boundaries");
            for (std::size_t j = 0; j < b.size(); ++j) {
              require_integral(b[j], "bounds[" + std::to_string(j) + "]");
              if (j > 0 && b[j] <= b[j - 1]) {
                throw SpecError("bounds must be strictly ascending (bounds[" +
                                std::to_string(j) + "])");
              }
            }
            for (std::size_t j = 1; j < b.size(); ++j) {
              if (domain == Domain::Integers) {
                finite_cells_.push_back(int_cell(j, b[j - 1].get_num(), b[j].get_num() - 1));
              } else {
                finite_cells_.push_back(Cell{j, b[j - 1], b[j], j == 1, true, Domain::Reals});
              }
            }
          },
          [&](const ExplicitCells& k) {
            if (k.cells.empty()) throw SpecError("bounds must list at least one cell");
            for (std::size_t j = 0; j < k.cells.size(); ++j) {
              const auto& [lo, hi] = k.cells[j];
              const std::string field = "bounds[" + std::to_string(j) + "]";
              require_integral(lo, field);
              require_integral(hi, field);
              if (lo > hi) throw SpecError(field + ": lower exceeds upper");
              if (domain == Domain::Reals && j > 0 && lo == hi) {
                throw SpecError(field + ": lower-open real cell must have positive width");
              }
              if (j > 0 && lo < k.cells[j - 1].first) {
                throw SpecError(field + ": cells must be listed in ascending order");
              }
              finite_cells_.push_back(
                  Cell{j + 1, lo, hi, domain == Domain::Integers || j == 0, true, domain});
            }
          },
          [&](const Singleton& k) {
            if (k.step <= 0) throw SpecError("step must be positive");
            if (domain == Domain::Integers && k.step != 1) {
              throw SpecError("step must be 1 in the integer domain");
            }
          },
      },
      spec_.kind);

  if (!finite_cells_.empty()) {
    origin_ = finite_cells_.front().lower;
    well_formed_ = validate(*this, finite_cells_.size()).ok();
  }
}

std::optional<CellIndex> Partition::cell_count() const {
  if (finite_cells_.empty()) return std::nullopt;
  return finite_cells_.size();
}

bool Partition::unbounded_widths() const {
  return std::holds_alternative<Fibonacci>(spec_.kind) ||
         std::holds_alternative<EpsilonGrowth>(spec_.kind);
}

Cell Partition::cell_at(CellIndex i) const {
  if (i == 0) throw DomainError("cell indices start at 1");
  if (!finite_cells_.empty()) {
    if (i > finite_cells_.size()) {
      throw RangeError("cell " + std::to_string(i) + " beyond the last cell " +
                       std::to_string(finite_cells_.size()));
    }
    return finite_cells_[i - 1];
  }
  const Integer n(static_cast<unsigned long>(i));
  return std::visit(
      overloaded{
          [&](const FixedWidth& k) {
            Integer w(static_cast<unsigned long>(k.width));
            return int_cell(i, w * (n - 1), w * n - 1);
          },
          [&](const Fibonacci&) { return int_cell(i, fib(i + 1) - 1, fib(i + 2) - 2); },
          [&](const EpsilonGrowth& k) {
            if (i == 1) return Cell{1, Number(0), Number(1, 2), true, true, Domain::Reals};
            return Cell{i, epsilon_upper(k.epsilon, i - 1), epsilon_upper(k.epsilon, i), false,
                        true, Domain::Reals};
          },
          [&](const Singleton& k) {
            Number at = k.step * Number(n - 1);
            return Cell{i, at, at, true, true, spec_.domain};
          },
          [&](const auto&) -> Cell { throw Error("unreachable: finite partition without cells"); },
      },
      spec_.kind);
}

void Partition::check_domain(const Number& x) const {
  if (x < origin_) {
    throw DomainError("value " + x.get_str() + " lies below the origin " + origin_.get_str());
  }
  if (spec_.domain == Domain::Integers && !is_integer(x)) {
    throw DomainError("value " + x.get_str() + " is not an integer");
  }
  if (const auto* s = std::get_if<Singleton>(&spec_.kind)) {
    if (!is_integer(Number(x / s->step))) {
      throw DomainError("value " + x.get_str() + " is not on the lattice of step " +
                        s->step.get_str());
    }
  }
}

std::optional<CellIndex> Partition::index_of(const Number& x) const {
  if (!finite_cells_.empty()) {
    if (!well_formed_) {
      for (const auto& c : finite_cells_) {
        if (c.contains(x)) return c.index;
      }
      return std::nullopt;
    }
    auto it = std::partition_point(finite_cells_.begin(), finite_cells_.end(),
                                   [&](const Cell& c) { return c.upper < x; });
    if (it != finite_cells_.end() && it->contains(x)) return it->index;
    return std::nullopt;
  }
  return std::visit(
      overloaded{
          [&](const FixedWidth& k) -> std::optional<CellIndex> {
            Integer q;
            Integer w(static_cast<unsigned long>(k.width));
            mpz_fdiv_q(q.get_mpz_t(), x.get_num_mpz_t(), w.get_mpz_t());
            return to_index(q + 1);
          },
          [&](const Fibonacci&) -> std::optional<CellIndex> {
            const Integer v = x.get_num();
            return detail::first_true([&](std::uint64_t i) { return fib(i + 2) - 2 >= v; });
          },
          [&](const EpsilonGrowth& k) -> std::optional<CellIndex> {
            if (x <= Number(1, 2)) return 1;
            // upper(i) >= x  <=>  i(i+1) >= 2 (eps (x - 1/2) + 1) =: t.
            Number t = 2 * (k.epsilon * (x - Number(1, 2)) + 1);
            Integer need = -floor(Number(-t));
            Integer i;
            mpz_sqrt(i.get_mpz_t(), need.get_mpz_t());
            while (i > 1 && (i - 1) * i >= need) --i;
            while (i * (i + 1) < need) ++i;
            return to_index(i);
          },
          [&](const Singleton& k) -> std::optional<CellIndex> {
            return to_index(floor(Number(x / k.step)) + 1);
          },
          [&](const auto&) -> std::optional<CellIndex> { return std::nullopt; },
      },
      spec_.kind);
}

std::optional<Cell> Partition::find(const Number& x) const {
  try {
    check_domain(x);
  } catch (const DomainError&) {
    return std::nullopt;
  }
  auto i = index_of(x);
  if (!i) return std::nullopt;
  return cell_at(*i);
}

Cell Partition::cell_of(const Number& x) const {
  check_domain(x);
  auto i = index_of(x);
  if (!i) throw RangeError("value " + x.get_str() + " lies outside every cell");
  return cell_at(*i);
}

Partition build_partition(PartitionSpec spec) { return Partition(std::move(spec)); }
Cell cell_at(const Partition& p, CellIndex index) { return p.cell_at(index); }
Cell cell_of(const Partition& p, const Number& x) { return p.cell_of(x); }

ValidationReport validate(const Partition& p, CellIndex up_to) {
  ValidationReport report;
  if (auto n = p.cell_count()) up_to = std::min(up_to, *n);
  report.checked = up_to;

  auto add = [&](Violation v, CellIndex i, std::string detail) {
    report.findings.push_back({v, i, std::move(detail)});
  };

  // Highest upper bound seen so far; every later cell must start above it.
  std::optional<Cell> reach;
  for (CellIndex i = 1; i <= up_to; ++i) {
    const Cell c = p.cell_at(i);
    const bool ints = c.domain == Domain::Integers;
    if (c.lower > c.upper) add(Violation::Shape, i, "lower bound exceeds upper bound");
    if (c.is_singleton() && !(c.lower_closed && c.upper_closed)) {
      add(Violation::Shape, i, "degenerate cell must be closed");
    }
    if (ints && (!is_integer(c.lower) || !is_integer(c.upper))) {
      add(Violation::Shape, i, "integer cell with non-integer bound");
    }

    if (reach) {
      if (c.lower < reach->lower) {
        add(Violation::Ordering, i,
            "starts before cell " + std::to_string(reach->index) + " (" + describe(c) + ")");
      }
      const bool touch_both = ints || (c.lower_closed && reach->upper_closed);
      if (c.lower < reach->upper || (c.lower == reach->upper && touch_both)) {
        add(Violation::Disjointness, i,
            describe(c) + " overlaps cell " + std::to_string(reach->index) + " " +
                describe(*reach));
      } else {
        bool gap;
        if (const auto* s = std::get_if<Singleton>(&p.spec().kind)) {
          // Base set is the lattice, so neighbours are one step apart.
          gap = c.lower > reach->upper + s->step;
        } else if (ints) {
          gap = c.lower > reach->upper + 1;
        } else {
          gap = c.lower > reach->upper || (!c.lower_closed && !reach->upper_closed);
        }
        if (gap) {
          add(Violation::Coverage, i,
              "gap between cell " + std::to_string(reach->index) + " " + describe(*reach) +
                  " and " + describe(c));
        }
      }
    } else if (c.lower != p.origin() || !c.lower_closed) {
      add(Violation::Coverage, i, "first cell does not start at the origin");
    }
    if (!reach || c.upper > reach->upper) reach = c;
  }
  return report;
}

std::string to_string(Domain d) { return d == Domain::Integers ? "int" : "real"; }

std::string to_string(Violation v) {
  switch (v) {
    case Violation::Shape: return "shape";
    case Violation::Disjointness: return "disjointness";
    case Violation::Coverage: return "coverage";
    case Violation::Ordering: return "ordering";
  }
  return "unknown";
}

std::string describe(const Cell& c) {
  if (c.domain == Domain::Integers) {
    if (c.is_singleton()) return "{" + short_form(c.lower) + "}";
    return "{" + short_form(c.lower) + ".." + short_form(c.upper) + "}";
  }
  if (c.is_singleton()) return "{" + short_form(c.lower) + "}";
  return std::string(c.lower_closed ? "[" : "(") + short_form(c.lower) + ", " +
         short_form(c.upper) + (c.upper_closed ? "]" : ")");
}

}  // namespace coarse
