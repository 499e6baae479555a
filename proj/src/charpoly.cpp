#include "heawood/charpoly.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace heawood {

namespace {

// Coefficients of the x_{l4} polynomial, constant term first. Guarded by
// the digit-count and checksum tests in tests/test_charpoly.cpp.
constexpr std::string_view kXl4Coefficients[] = {
    "3348011046054687446588586894387", // T^0
    "273675328487397647237991825000783", // T^1
    "10528063279784456967398200502468691", // T^2
    "255652807673380729611728470237761555", // T^3
    "4422420653730204080254904433581059629", // T^4
    "58239553681851019741523172701651095197", // T^5
    "608930205226991194133708856923335926849", // T^6
    "5203227805425306398124203036880713293545", // T^7
    "37109973679879574898320679050599920287450", // T^8
    "224472408717775611491021156521892619843158", // T^9
    "1166012291532956694933924468283307736346382", // T^10
    "5253121604626527413065008160498494678879110", // T^11
    "20690863770430719393270631202371992513434414", // T^12
    "71715126275516155874072784490774971066237326", // T^13
    "219897164806211674807756610736580167553542758", // T^14
    "599083193386406195758633497190777431543886358", // T^15
    "1455265549140319863369871581645012065857955441", // T^16
    "3160933625571584072448347845721693351127774301", // T^17
    "6152912915312070842952691100801887803370907305", // T^18
    "10751995223766688842173817330681019107518783545", // T^19
    "16888459659695355326863471817880692818622047623", // T^20
    "23863989284324858347511498529857889181323950967", // T^21
    "30346538554876120431728853077314517314609386819", // T^22
    "34722813139066795200081139797717329223025992699", // T^23
    "35716781564909427260214641236767872783162088204", // T^24
    "32963773017875955980864755706102737727974961688", // T^25
    "27201188778043412156622512508710379868716241416", // T^26
    "19954407479150801176386566760213350973570196080", // T^27
    "12902691890291653798206974719870993995735753540", // T^28
    "7274584518541872070335933586256322019748139172", // T^29
    "3550298683130683434462662943215234037891507412", // T^30
    "1533983381070251025995839971747580678500964852", // T^31
    "664103288660372783854070699409333594554864741", // T^32
    "355269696471069385886754716351566237266830009", // T^33
    "213238754173051016042819729417269617854966165", // T^34
    "77130998985650655864689962089382720577858101", // T^35
    "-57662664820854923809493690824194000968797973", // T^36
    "-146045321267662575006252144965793560225509061", // T^37
    "-164022007275895644197052849670790737036540873", // T^38
    "-126213399593210124294769323126921742027688497", // T^39
    "-67869160289243415287139367956058055810404822", // T^40
    "-19570606574427556470966233073766236628787234", // T^41
    "6140751881298455069763046326781936407849238", // T^42
    "12720991312674958659494390034544200285598942", // T^43
    "9840137643451726574992603743314811193317886", // T^44
    "5180867575272248126071836905848828341927070", // T^45
    "1923952833473734147443634652898764867278198", // T^46
    "286935408276107233753158822122577885606822", // T^47
    "-343872926425618669220741202688368202345065", // T^48
    "-451645674349824891937650532097542435080453", // T^49
    "-325157218431048323421805399697113970403121", // T^50
    "-152272756904971138353148344210050406803617", // T^51
    "-30934416501269415569285918492882277029311", // T^52
    "21867253654523569285667250014704999794577", // T^53
    "28955348159492426037443729536713509636773", // T^54
    "17321709733106215547946139735151891780269", // T^55
    "4733784662326174469816987234959768253776", // T^56
    "-1650827959998751884275421145646879272940", // T^57
    "-2435243231716218466580115477132980137292", // T^58
    "-1097279690260575519531876572540059803892", // T^59
    "-60617631026953339799378305296984824656", // T^60
    "200727376265061817580032667984094835280", // T^61
    "109385892925207478360122518287948266224", // T^62
    "14201705397119143149709337683063717104", // T^63
    "-11463391775661584618715895715025904128", // T^64
    "-6556557400356413683063078157405200320", // T^65
    "-898635822877066299154282762314323520", // T^66
    "477056183905245971917488031692938304", // T^67
    "254616663098419271111012531383618560", // T^68
    "31343179682405215504161837658819584", // T^69
    "-14303114368662112977785429692643328", // T^70
    "-6892489761595983453459595854256128", // T^71
    "-763800345871643605733535512788992", // T^72
    "341989984727973884867396338188288", // T^73
    "149189048927171391219263917572096", // T^74
    "11025799477301561380923592949760", // T^75
    "-8175821639408563679884718899200", // T^76
    "-2120259444356145889512456192000", // T^77
    "152135800369825007098920960000", // T^78
    "82521703002365615643033600000", // T^79
};

int sign_of(const mpz_class& z)
{
    const int s = mpz_sgn(z.get_mpz_t());
    return s > 0 ? 1 : (s < 0 ? -1 : 0);
}

// Pseudo-remainder of a by b together with the sign of the positive
// multiple relating it to the true remainder: rem(a,b) = sign * |k| * out.
struct PseudoRemainder {
    BigPoly value;
    int sign;
};

PseudoRemainder pseudo_remainder(const BigPoly& a, const BigPoly& b)
{
    std::vector<mpz_class> r = a.coefficients();
    const std::vector<mpz_class>& bc = b.coefficients();
    const int db = b.degree();
    const mpz_class& lb = b.leading();
    int used = 0;
    int dr = a.degree();
    while (dr >= db && dr >= 0) {
        const mpz_class lead = r[static_cast<std::size_t>(dr)];
        const int shift = dr - db;
        for (int i = 0; i <= dr; ++i)
            r[static_cast<std::size_t>(i)] *= lb;
        for (int i = 0; i <= db; ++i)
            r[static_cast<std::size_t>(i + shift)] -= lead * bc[static_cast<std::size_t>(i)];
        ++used;
        r.pop_back();
        dr = static_cast<int>(r.size()) - 1;
        while (dr >= 0 && r[static_cast<std::size_t>(dr)] == 0) {
            r.pop_back();
            --dr;
        }
    }
    // r = lb^used * a mod b, so the true remainder is r / lb^used; only the
    // sign of that scale matters.
    const int s = (sign_of(lb) < 0 && (used % 2) == 1) ? -1 : 1;
    return {BigPoly(std::move(r)), s};
}

mpz_class content(const std::vector<mpz_class>& c)
{
    mpz_class g = 0;
    for (const mpz_class& v : c) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
        if (g == 1)
            break;
    }
    return g;
}

} // namespace

BigPoly::BigPoly(std::vector<mpz_class> coefficients) : c_(std::move(coefficients)) { trim(); }

BigPoly::BigPoly(std::initializer_list<long> coefficients)
{
    for (long v : coefficients)
        c_.emplace_back(v);
    trim();
}

BigPoly BigPoly::from_strings(const std::vector<std::string_view>& coefficients)
{
    std::vector<mpz_class> c;
    c.reserve(coefficients.size());
    for (std::string_view s : coefficients) {
        mpz_class z;
        if (z.set_str(std::string(s), 10) != 0)
            throw std::invalid_argument("bad integer coefficient: " + std::string(s));
        c.push_back(std::move(z));
    }
    return BigPoly(std::move(c));
}

void BigPoly::trim()
{
    while (!c_.empty() && c_.back() == 0)
        c_.pop_back();
}

BigPoly BigPoly::derivative() const
{
    std::vector<mpz_class> d;
    for (std::size_t k = 1; k < c_.size(); ++k)
        d.push_back(c_[k] * static_cast<unsigned long>(k));
    return BigPoly(std::move(d));
}

int BigPoly::sign_at(const mpq_class& t) const
{
    if (c_.empty())
        return 0;
    // sign p(a/b) = sign sum c_k a^k b^(n-k) for b > 0.
    const mpz_class& a = t.get_num();
    const mpz_class& b = t.get_den();
    mpz_class acc = c_.back();
    mpz_class bpow = 1;
    for (std::size_t k = c_.size() - 1; k-- > 0;) {
        bpow *= b;
        acc = acc * a + c_[k] * bpow;
    }
    return sign_of(acc);
}

BigPoly BigPoly::primitive() const
{
    if (c_.empty())
        return *this;
    const mpz_class g = content(c_);
    std::vector<mpz_class> out = c_;
    if (g != 1)
        for (mpz_class& v : out)
            mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), g.get_mpz_t());
    return BigPoly(std::move(out));
}

const std::vector<std::string_view>& charpoly_xl4_strings()
{
    static const std::vector<std::string_view> v(std::begin(kXl4Coefficients), std::end(kXl4Coefficients));
    return v;
}

const BigPoly& charpoly_xl4()
{
    static const BigPoly p = BigPoly::from_strings(charpoly_xl4_strings());
    return p;
}

mpq_class eval_exact(const BigPoly& p, const mpq_class& t)
{
    mpq_class acc = 0;
    const auto& c = p.coefficients();
    for (std::size_t k = c.size(); k-- > 0;)
        acc = acc * t + mpq_class(c[k]);
    acc.canonicalize();
    return acc;
}

BigPoly poly_gcd(const BigPoly& a, const BigPoly& b)
{
    BigPoly x = a.primitive();
    BigPoly y = b.primitive();
    if (x.degree() < y.degree())
        std::swap(x, y);
    while (!y.is_zero()) {
        BigPoly r = pseudo_remainder(x, y).value.primitive();
        x = std::move(y);
        y = std::move(r);
    }
    if (!x.is_zero() && sign_of(x.leading()) < 0) {
        std::vector<mpz_class> c = x.coefficients();
        for (mpz_class& v : c)
            v = -v;
        x = BigPoly(std::move(c));
    }
    return x;
}

BigPoly exact_quotient(const BigPoly& a, const BigPoly& b)
{
    if (b.is_zero())
        throw std::domain_error("exact_quotient: division by zero polynomial");
    const int db = b.degree();
    std::vector<mpq_class> r;
    for (const mpz_class& v : a.coefficients())
        r.emplace_back(v);
    const int dq = a.degree() - db;
    if (dq < 0)
        throw std::domain_error("exact_quotient: divisor degree exceeds dividend");
    std::vector<mpq_class> q(static_cast<std::size_t>(dq + 1));
    const mpq_class lb(b.leading());
    for (int k = dq; k >= 0; --k) {
        const mpq_class f = r[static_cast<std::size_t>(k + db)] / lb;
        q[static_cast<std::size_t>(k)] = f;
        for (int i = 0; i <= db; ++i)
            r[static_cast<std::size_t>(k + i)] -= f * mpq_class(b.coeff(i));
    }
    for (int i = 0; i < db; ++i)
        if (r[static_cast<std::size_t>(i)] != 0)
            throw std::domain_error("exact_quotient: nonzero remainder");

    mpz_class den = 1;
    for (const mpq_class& v : q)
        mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), v.get_den_mpz_t());
    std::vector<mpz_class> out;
    for (const mpq_class& v : q)
        out.emplace_back(v.get_num() * (den / v.get_den()));
    return BigPoly(std::move(out)).primitive();
}

bool is_squarefree(const BigPoly& p)
{
    if (p.degree() < 2)
        return true;
    return poly_gcd(p, p.derivative()).degree() == 0;
}

BigPoly squarefree_part(const BigPoly& p)
{
    if (p.degree() < 2)
        return p.primitive();
    const BigPoly g = poly_gcd(p, p.derivative());
    if (g.degree() == 0)
        return p.primitive();
    return exact_quotient(p, g);
}

SturmSequence::SturmSequence(const BigPoly& p)
{
    if (p.is_zero())
        throw std::invalid_argument("SturmSequence: zero polynomial");
    seq_.push_back(p);
    BigPoly d = p.derivative();
    if (d.is_zero())
        return;
    seq_.push_back(d.primitive());
    while (true) {
        const BigPoly& a = seq_[seq_.size() - 2];
        const BigPoly& b = seq_.back();
        PseudoRemainder r = pseudo_remainder(a, b);
        if (r.value.is_zero())
            break;
        std::vector<mpz_class> c = r.value.primitive().coefficients();
        // next = -rem(a, b), up to a positive factor.
        if (r.sign > 0)
            for (mpz_class& v : c)
                v = -v;
        seq_.emplace_back(std::move(c));
    }
}

int SturmSequence::variations_at(const mpq_class& t) const
{
    int changes = 0;
    int last = 0;
    for (const BigPoly& q : seq_) {
        const int s = q.sign_at(t);
        if (s == 0)
            continue;
        if (last != 0 && s != last)
            ++changes;
        last = s;
    }
    return changes;
}

int SturmSequence::variations_at_pos_infinity() const
{
    int changes = 0;
    int last = 0;
    for (const BigPoly& q : seq_) {
        const int s = sign_of(q.leading());
        if (last != 0 && s != last)
            ++changes;
        last = s;
    }
    return changes;
}

int SturmSequence::variations_at_neg_infinity() const
{
    int changes = 0;
    int last = 0;
    for (const BigPoly& q : seq_) {
        const int s = (q.degree() % 2 == 0) ? sign_of(q.leading()) : -sign_of(q.leading());
        if (last != 0 && s != last)
            ++changes;
        last = s;
    }
    return changes;
}

int SturmSequence::count(const mpq_class& lo, const mpq_class& hi) const
{
    return variations_at(lo) - variations_at(hi);
}

int SturmSequence::count_all() const { return variations_at_neg_infinity() - variations_at_pos_infinity(); }

int count_real_roots(const BigPoly& p, const mpq_class& lo, const mpq_class& hi)
{
    if (!(lo < hi))
        throw std::invalid_argument("count_real_roots: empty interval");
    if (!is_squarefree(p))
        throw NotSquarefree(squarefree_part(p));
    return SturmSequence(p).count(lo, hi);
}

int count_real_roots(const BigPoly& p)
{
    if (!is_squarefree(p))
        throw NotSquarefree(squarefree_part(p));
    return SturmSequence(p).count_all();
}

mpq_class root_bound(const BigPoly& p)
{
    if (p.degree() < 1)
        return mpq_class(1);
    mpq_class best = 0;
    const mpz_class lead = abs(p.leading());
    for (int k = 0; k < p.degree(); ++k) {
        mpq_class r(abs(p.coeff(k)), lead);
        r.canonicalize();
        if (r > best)
            best = r;
    }
    // Rounded up to a power of two so bisection endpoints stay dyadic.
    mpq_class bound = best + 1;
    mpz_class pow2 = 1;
    while (mpq_class(pow2) < bound)
        pow2 *= 2;
    return mpq_class(pow2);
}

namespace {

// A split point strictly inside (lo, hi) where p does not vanish.
mpq_class split_point(const BigPoly& p, const mpq_class& lo, const mpq_class& hi)
{
    static constexpr int kFractions[][2] = {{1, 2}, {1, 3}, {2, 3}, {2, 5}, {3, 5}, {3, 7}, {4, 7}, {5, 11}};
    for (const auto& f : kFractions) {
        mpq_class m = lo + (hi - lo) * mpq_class(f[0], f[1]);
        m.canonicalize();
        if (p.sign_at(m) != 0)
            return m;
    }
    for (int den = 13;; den += 2) {
        mpq_class m = lo + (hi - lo) * mpq_class(den / 2, den);
        m.canonicalize();
        if (p.sign_at(m) != 0)
            return m;
    }
}

struct Pending {
    mpq_class lo;
    mpq_class hi;
    int vlo;
    int vhi;
};

} // namespace

std::vector<IsolatingInterval> isolate_real_roots(const BigPoly& p)
{
    if (p.is_zero())
        throw std::invalid_argument("isolate_real_roots: zero polynomial");
    if (!is_squarefree(p))
        throw NotSquarefree(squarefree_part(p));
    std::vector<IsolatingInterval> out;
    if (p.degree() < 1)
        return out;

    const SturmSequence sturm(p);
    const mpq_class bound = root_bound(p);
    std::vector<Pending> stack{{-bound, bound, sturm.variations_at(-bound), sturm.variations_at(bound)}};
    while (!stack.empty()) {
        Pending cur = std::move(stack.back());
        stack.pop_back();
        const int n = cur.vlo - cur.vhi;
        if (n == 0)
            continue;
        if (n == 1) {
            out.push_back({cur.lo, cur.hi});
            continue;
        }
        const mpq_class mid = split_point(p, cur.lo, cur.hi);
        const int vmid = sturm.variations_at(mid);
        stack.push_back({mid, cur.hi, vmid, cur.vhi});
        stack.push_back({cur.lo, mid, cur.vlo, vmid});
    }
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.lo < b.lo; });
    return out;
}

Real refine_root(const BigPoly& p, const IsolatingInterval& iv, int digits)
{
    const Precision prec(digits);
    mpq_class lo = iv.lo;
    mpq_class hi = iv.hi;
    int slo = p.sign_at(lo);
    const int shi = p.sign_at(hi);
    if (shi == 0)
        return Real(hi, prec);
    if (slo == 0 || slo == shi)
        throw std::invalid_argument("refine_root: interval does not bracket a simple root");

    mpz_class scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(digits));
    const mpq_class width(1, scale);
    while (hi - lo >= width) {
        mpq_class mid = (lo + hi) / 2;
        mid.canonicalize();
        const int s = p.sign_at(mid);
        if (s == 0)
            return Real(mid, prec);
        if (s == slo)
            lo = mid;
        else
            hi = mid;
    }
    mpq_class mid = (lo + hi) / 2;
    mid.canonicalize();
    return Real(mid, prec);
}

} // namespace heawood
