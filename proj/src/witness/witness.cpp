#include <memory>
#include <string>
#include <variant>

#include "powsum/errors.hpp"
#include "powsum/exactla.hpp"
#include "powsum/witness.hpp"

namespace powsum::witness {

using polyring::monomials;

BinomialSet binomial_set(std::size_t n) {
    if (n < 2) throw InputError("the binomial set needs n >= 2, got " + std::to_string(n));
    BinomialSet set{n, {}};
    set.forms.push_back(polyring::power(Form::variable(n, 0), 2));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            set.forms.push_back(polyring::power(Form::variable(n, i) + Form::variable(n, j), 2));
    return set;
}

namespace {

template <class Field>
struct FieldOps;

template <>
struct FieldOps<RationalField> {
    using T = Rational;
    const RationalField field{};
    T from(const Rational& x) const { return x; }
    exactla::RationalSubspace span(const Matrix<T>& rows) const { return exactla::row_space(rows); }
    std::size_t rank(const Matrix<T>& m) const { return exactla::rank(m); }
};

template <>
struct FieldOps<PrimeField> {
    using T = std::uint64_t;
    PrimeField field;
    T from(const Rational& x) const { return field.reduce(x); }
    exactla::ModularSubspace span(const Matrix<T>& rows) const { return exactla::row_space(rows, field); }
    std::size_t rank(const Matrix<T>& m) const { return exactla::rank(m, field); }
};

template <class Field>
class Engine {
public:
    using Ops = FieldOps<Field>;
    using T = typename Ops::T;

    Engine(const std::vector<Form>& points, const ProblemParams& params, Ops ops)
        : points_(points), params_(params), ops_(std::move(ops)), tangent_span_(build_span()) {}

    std::size_t span_dim() const { return tangent_span_.dim(); }

    std::size_t kernel_dim(std::size_t j) const {
        const std::size_t n = params_.n;
        const unsigned k = params_.k;
        const std::size_t dim_kd = params_.dim_kd();
        const auto basis = monomials(n, k);
        const Form base = polyring::power(points_[j], params_.d - 2);

        std::vector<bool> is_pivot(dim_kd, false);
        for (const auto p : tangent_span_.pivot_columns()) is_pivot[p] = true;
        std::vector<std::size_t> free_columns;
        for (std::size_t c = 0; c < dim_kd; ++c)
            if (!is_pivot[c]) free_columns.push_back(c);

        // Rows: (t, free coordinate of the quotient S^(kd)/W); columns: v.
        Matrix<T> phi(basis.size() * free_columns.size(), basis.size());
        std::vector<T> dense(dim_kd);
        for (std::size_t v = 0; v < basis.size(); ++v) {
            const Form bv = polyring::mul(base, Form::monomial(basis[v]));
            for (std::size_t t = 0; t < basis.size(); ++t) {
                const Form image = polyring::mul(bv, Form::monomial(basis[t]));
                std::fill(dense.begin(), dense.end(), T(0));
                for (const auto& [mono, c] : image.terms()) dense[polyring::rank(mono)] = ops_.from(c);
                const auto membership = exactla::contains(tangent_span_, dense);
                for (std::size_t f = 0; f < free_columns.size(); ++f)
                    phi(t * free_columns.size() + f, v) = membership.residual[free_columns[f]];
            }
        }
        return basis.size() - ops_.rank(phi);
    }

private:
    auto build_span() const {
        const std::size_t dim_k = params_.dim_k();
        Matrix<T> rows(points_.size() * dim_k, params_.dim_kd());
        for (std::size_t i = 0; i < points_.size(); ++i) {
            const auto generators = secant::tangent_generators(points_[i], params_.d);
            for (std::size_t g = 0; g < generators.size(); ++g)
                for (const auto& [mono, c] : generators[g].terms())
                    rows(i * dim_k + g, polyring::rank(mono)) = ops_.from(c);
        }
        return ops_.span(rows);
    }

    const std::vector<Form>& points_;
    ProblemParams params_;
    Ops ops_;
    exactla::SubspaceBasis<Field> tangent_span_;
};

}  // namespace

struct ContactAnalyzer::Impl {
    std::vector<Form> points;
    ProblemParams params;
    FieldKind field;
    std::variant<std::unique_ptr<Engine<RationalField>>, std::unique_ptr<Engine<PrimeField>>> engine;

    std::size_t span_dim() const {
        return std::visit([](const auto& e) { return e->span_dim(); }, engine);
    }
    std::size_t kernel_dim(std::size_t j) const {
        return std::visit([j](const auto& e) { return e->kernel_dim(j); }, engine);
    }
};

ContactAnalyzer::ContactAnalyzer(std::vector<Form> points, unsigned d, FieldChoice field)
    : impl_(std::make_unique<Impl>()) {
    if (points.empty()) throw InputError("at least one point is required");
    for (const auto& q : points) {
        if (q.variables() != points.front().variables()) throw InputError("points live in different rings");
        if (q.degree() != points.front().degree()) throw InputError("points have different degrees");
        if (q.is_zero()) throw InputError("the zero form is not a point of the variety");
    }
    impl_->points = std::move(points);
    impl_->params = {impl_->points.front().variables(), impl_->points.front().degree(), d, impl_->points.size()};
    impl_->params.validate();
    impl_->field = field.kind;
    if (field.kind == FieldKind::rational)
        impl_->engine = std::make_unique<Engine<RationalField>>(impl_->points, impl_->params, FieldOps<RationalField>{});
    else
        impl_->engine = std::make_unique<Engine<PrimeField>>(impl_->points, impl_->params,
                                                             FieldOps<PrimeField>{field.prime});
    if (impl_->span_dim() != impl_->params.expected())
        throw PreconditionError("tangent spaces are not skew (rank " + std::to_string(impl_->span_dim()) +
                                " < " + std::to_string(impl_->params.expected()) +
                                "); the contact locus is undefined");
}

ContactAnalyzer::~ContactAnalyzer() = default;
ContactAnalyzer::ContactAnalyzer(ContactAnalyzer&&) noexcept = default;
ContactAnalyzer& ContactAnalyzer::operator=(ContactAnalyzer&&) noexcept = default;

const ProblemParams& ContactAnalyzer::params() const noexcept { return impl_->params; }
std::size_t ContactAnalyzer::tangent_span_dim() const noexcept { return impl_->span_dim(); }

ContactReport ContactAnalyzer::at(std::size_t index) const {
    if (index >= impl_->points.size()) throw InputError("base point index out of range");
    ContactReport r;
    r.base_point_index = index;
    r.kernel_dim = impl_->kernel_dim(index);
    r.passes = r.kernel_dim == 1;
    r.params = impl_->params;
    return r;
}

std::vector<ContactReport> ContactAnalyzer::all() const {
    std::vector<ContactReport> out(impl_->points.size());
#pragma omp parallel for schedule(dynamic)
    for (long j = 0; j < static_cast<long>(out.size()); ++j) out[j] = at(static_cast<std::size_t>(j));
    return out;
}

ContactReport contact_tangent_kernel(std::span<const Form> points, std::size_t index, unsigned d,
                                     FieldChoice field) {
    return ContactAnalyzer(std::vector<Form>(points.begin(), points.end()), d, field).at(index);
}

const char* to_string(Verdict v) noexcept {
    switch (v) {
        case Verdict::pass: return "PASS";
        case Verdict::fail: return "FAIL";
        case Verdict::precondition_failed: return "PRECONDITION-FAILED";
    }
    return "FAIL";
}

nlohmann::json to_json(const Certificate& c) {
    return {{"n", c.n},
            {"m", c.m},
            {"skew_rank", c.skew_rank},
            {"expected", c.expected},
            {"contact_kernel_dims", c.contact_kernel_dims},
            {"verdict", to_string(c.verdict)},
            {"field", secant::to_string(c.field)}};
}

nlohmann::json to_json(const ContactReport& r) {
    return {{"base_point_index", r.base_point_index},
            {"kernel_dim", r.kernel_dim},
            {"passes", r.passes},
            {"params", secant::to_json(r.params)}};
}

Certificate certify_points(std::span<const Form> points, unsigned d, FieldChoice field) {
    if (points.empty()) throw InputError("at least one point is required");
    Certificate cert;
    cert.n = points.front().variables();
    cert.m = points.size();
    cert.field = field.kind;
    try {
        const ContactAnalyzer analyzer(std::vector<Form>(points.begin(), points.end()), d, field);
        cert.skew_rank = analyzer.tangent_span_dim();
        cert.expected = analyzer.params().expected();
        bool all_one = true;
        for (const auto& r : analyzer.all()) {
            cert.contact_kernel_dims.push_back(r.kernel_dim);
            all_one = all_one && r.passes;
        }
        cert.verdict = all_one ? Verdict::pass : Verdict::fail;
    } catch (const PreconditionError&) {
        const auto report = secant::check_skewness(points, d, field.kind, field.prime);
        cert.skew_rank = report.rank;
        cert.expected = report.expected;
        cert.verdict = Verdict::precondition_failed;
    }
    return cert;
}

Certificate identifiability_certificate(std::size_t n, FieldChoice field, std::size_t max_n) {
    if (n < 2) throw InputError("n must be at least 2");
    if (n > max_n)
        throw InputError("n = " + std::to_string(n) + " exceeds the size guard max_n = " + std::to_string(max_n));
    const BinomialSet set = binomial_set(n);
    return certify_points(set.forms, 3, field);
}

}  // namespace powsum::witness
