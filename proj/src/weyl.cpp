#include "nilcoh/weyl.hpp"

#include "json.hpp"

#include <algorithm>
#include <fstream>

namespace nilcoh {

namespace {

IntMatrix reflection_matrix(const RootSystem& rs, int i)
{
    const int n = rs.rank();
    IntMatrix s = IntMatrix::Identity(n, n);
    s.col(i) -= rs.cartan().col(i);
    return s;
}

std::filesystem::path cache_file(const std::filesystem::path& dir, const RootSystem& rs)
{
    return dir / ("weyl-" + rs.label() + "-" + rs.fingerprint() + ".json");
}

std::optional<std::vector<WeylElement>> read_cache(const std::filesystem::path& path, const RootSystem& rs)
{
    std::ifstream in(path);
    if (!in)
        return std::nullopt;
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception&) {
        return std::nullopt;
    }
    if (j.value("type", "") != rs.label() || j.value("fingerprint", "") != rs.fingerprint())
        return std::nullopt;
    const int n = rs.rank();
    std::vector<WeylElement> out;
    for (const auto& e : j.at("elements")) {
        WeylElement w;
        w.word = e.at("word").get<std::vector<int>>();
        const auto rows = e.at("action").get<std::vector<std::vector<int>>>();
        w.action = IntMatrix(n, n);
        for (int r = 0; r < n; ++r) {
            for (int c = 0; c < n; ++c)
                w.action(r, c) = rows.at(static_cast<std::size_t>(r)).at(static_cast<std::size_t>(c));
        }
        out.push_back(std::move(w));
    }
    return out;
}

void write_cache(const std::filesystem::path& path, const RootSystem& rs, const std::vector<WeylElement>& elements)
{
    nlohmann::json j;
    j["type"] = rs.label();
    j["fingerprint"] = rs.fingerprint();
    auto& list = j["elements"];
    list = nlohmann::json::array();
    for (const WeylElement& w : elements) {
        std::vector<std::vector<int>> rows;
        for (Eigen::Index r = 0; r < w.action.rows(); ++r)
            rows.push_back(to_std(w.action.row(r).transpose()));
        list.push_back({{"word", w.word}, {"action", rows}});
    }
    std::filesystem::create_directories(path.parent_path());
    const auto tmp = path.string() + ".tmp";
    {
        std::ofstream out(tmp);
        out << j.dump();
    }
    std::filesystem::rename(tmp, path);
}

} // namespace

std::string WeylElement::name() const
{
    if (word.empty())
        return "e";
    std::string s;
    for (int i : word)
        s += "s" + std::to_string(i + 1);
    return s;
}

WeylGroup WeylGroup::enumerate(const RootSystem& rs, const EnumerateOptions& options)
{
    WeylGroup W;
    W.rs_ = rs;

    if (options.cache_dir) {
        if (auto cached = read_cache(cache_file(*options.cache_dir, rs), rs)) {
            W.elements_ = std::move(*cached);
            W.from_cache_ = true;
            W.index();
            return W;
        }
    }

    const int n = rs.rank();
    std::vector<IntMatrix> simple;
    for (int i = 0; i < n; ++i)
        simple.push_back(reflection_matrix(rs, i));

    const IntVector rho = rs.rho();
    WeylElement e;
    e.action = IntMatrix::Identity(n, n);
    W.elements_.push_back(e);
    W.by_image_.emplace(rho, 0);
    std::size_t layer_begin = 0;
    while (layer_begin < W.elements_.size()) {
        const std::size_t layer_end = W.elements_.size();
        for (std::size_t k = layer_begin; k < layer_end; ++k) {
            for (int i = 0; i < n; ++i) {
                IntMatrix action = simple[static_cast<std::size_t>(i)] * W.elements_[k].action;
                IntVector image = action * rho;
                if (W.by_image_.contains(image))
                    continue;
                if (W.elements_.size() >= options.max_order)
                    throw BudgetError("Weyl group of " + rs.label() + " exceeds the enumeration bound of "
                                      + std::to_string(options.max_order) + " elements");
                WeylElement w;
                w.word.reserve(W.elements_[k].word.size() + 1);
                w.word.push_back(i);
                w.word.insert(w.word.end(), W.elements_[k].word.begin(), W.elements_[k].word.end());
                w.action = std::move(action);
                W.by_image_.emplace(std::move(image), W.elements_.size());
                W.elements_.push_back(std::move(w));
            }
        }
        layer_begin = layer_end;
    }

    if (options.cache_dir)
        write_cache(cache_file(*options.cache_dir, rs), rs, W.elements_);
    return W;
}

void WeylGroup::index()
{
    by_image_.clear();
    const IntVector rho = rs_.rho();
    for (std::size_t k = 0; k < elements_.size(); ++k)
        by_image_.emplace(elements_[k].action * rho, k);
    if (by_image_.size() != elements_.size())
        throw InternalError("duplicate Weyl group elements in enumeration");
}

std::optional<std::size_t> WeylGroup::find_by_rho_image(const IntVector& image) const
{
    auto it = by_image_.find(image);
    if (it == by_image_.end())
        return std::nullopt;
    return it->second;
}

std::size_t WeylGroup::from_word(const std::vector<int>& word) const
{
    IntVector image = rs_.rho();
    for (auto it = word.rbegin(); it != word.rend(); ++it) {
        if (*it < 0 || *it >= rs_.rank())
            throw PreconditionError("simple reflection index out of range");
        image = rs_.reflect_weight(*it, image);
    }
    return *find_by_rho_image(image);
}

std::size_t WeylGroup::multiply(std::size_t a, std::size_t b) const
{
    const IntVector image = elements_[a].action * (elements_[b].action * rs_.rho());
    return *find_by_rho_image(image);
}

std::size_t WeylGroup::inverse(std::size_t a) const
{
    std::vector<int> word(elements_[a].word.rbegin(), elements_[a].word.rend());
    return from_word(word);
}

std::vector<long long> WeylGroup::length_polynomial() const
{
    std::vector<long long> coeffs(static_cast<std::size_t>(elements_.back().length()) + 1, 0);
    for (const WeylElement& w : elements_)
        ++coeffs[static_cast<std::size_t>(w.length())];
    return coeffs;
}

IntVector dot(const WeylElement& w, const IntVector& lambda, const RootSystem& rs)
{
    const IntVector rho = rs.rho();
    return w.apply(lambda + rho) - rho;
}

std::vector<int> inversion_set(const WeylElement& w, const RootSystem& rs)
{
    // beta lies in Phi(w) iff w^{-1} beta is negative; w^{-1} applies the
    // word's reflections from the front.
    std::vector<int> out;
    for (int k = 0; k < rs.num_positive(); ++k) {
        IntVector c = rs.positive_root(k).coords;
        for (int i : w.word)
            c = rs.reflect_root(i, c);
        if ((c.array() <= 0).all())
            out.push_back(k);
    }
    return out;
}

CosetSystem min_coset_reps(const WeylGroup& W, const std::vector<int>& J)
{
    const RootSystem& rs = W.root_system();
    CosetSystem cs;
    cs.J = J;
    std::sort(cs.J.begin(), cs.J.end());
    for (int j : cs.J) {
        if (j < 0 || j >= rs.rank())
            throw PreconditionError("J contains an index outside the simple roots");
    }
    for (std::size_t k = 0; k < W.size(); ++k) {
        // w^{-1}(alpha_j) > 0 iff (w rho, alpha_j^vee) > 0.
        const IntVector image = W[k].apply(rs.rho());
        const bool ok = std::all_of(cs.J.begin(), cs.J.end(), [&](int j) { return image[j] > 0; });
        if (ok)
            cs.reps.push_back(k);
    }
    return cs;
}

std::vector<std::size_t> parabolic_subgroup(const WeylGroup& W, const std::vector<int>& J)
{
    std::vector<std::size_t> out;
    for (std::size_t k = 0; k < W.size(); ++k) {
        const auto& word = W[k].word;
        if (std::all_of(word.begin(), word.end(),
                [&](int i) { return std::find(J.begin(), J.end(), i) != J.end(); }))
            out.push_back(k);
    }
    return out;
}

std::size_t parabolic_longest(const WeylGroup& W, const std::vector<int>& J)
{
    const auto sub = parabolic_subgroup(W, J);
    return *std::max_element(sub.begin(), sub.end(),
        [&](std::size_t a, std::size_t b) { return W[a].length() < W[b].length(); });
}

std::vector<int> levi_positive_roots(const RootSystem& rs, const std::vector<int>& J)
{
    std::vector<int> out;
    for (int k = 0; k < rs.num_positive(); ++k) {
        const IntVector& c = rs.positive_root(k).coords;
        bool inside = true;
        for (int i = 0; i < rs.rank(); ++i) {
            if (c[i] != 0 && std::find(J.begin(), J.end(), i) == J.end())
                inside = false;
        }
        if (inside)
            out.push_back(k);
    }
    return out;
}

std::vector<int> nilradical_roots(const RootSystem& rs, const std::vector<int>& J)
{
    const auto levi = levi_positive_roots(rs, J);
    std::vector<int> out;
    for (int k = 0; k < rs.num_positive(); ++k) {
        if (std::find(levi.begin(), levi.end(), k) == levi.end())
            out.push_back(k);
    }
    return out;
}

} // namespace nilcoh
