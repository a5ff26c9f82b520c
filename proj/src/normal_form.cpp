#include "closedpoly/normal_form.hpp"

#include "closedpoly/error.hpp"

namespace closedpoly {

NormalizedForm normalize(const MultiPoly& f, const OrderSpec& order) {
    if (f.is_constant()) {
        throw DomainError("cannot normalize a constant polynomial");
    }
    const Rational constant = f.constant_term();
    MultiPoly core = f - MultiPoly::constant(f.nvars(), constant);
    const Rational scalar = leading_monomial(core, order).second;
    core *= scalar.inverse();
    return {std::move(core), scalar, constant};
}

} // namespace closedpoly
