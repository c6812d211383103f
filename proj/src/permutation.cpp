#include "permucover/permutation.hpp"

#include <algorithm>
#include <deque>
#include <set>

namespace permucover {

Permutation::Permutation(std::vector<int> images) : img_(std::move(images)) {
    std::vector<bool> seen(img_.size(), false);
    for (int v : img_) {
        if (v < 0 || v >= static_cast<int>(img_.size()) || seen[static_cast<std::size_t>(v)])
            throw InputError("not a bijection");
        seen[static_cast<std::size_t>(v)] = true;
    }
}

Permutation Permutation::identity(int n) {
    std::vector<int> img(static_cast<std::size_t>(n));
    for (int i = 0; i < n; i++) img[static_cast<std::size_t>(i)] = i;
    return Permutation(std::move(img));
}

Permutation Permutation::then(const Permutation& next) const {
    if (next.size() != size()) throw InputError("permutation size mismatch");
    std::vector<int> img(img_.size());
    for (std::size_t i = 0; i < img_.size(); i++)
        img[i] = next.img_[static_cast<std::size_t>(img_[i])];
    return Permutation(std::move(img));
}

Permutation Permutation::inverse() const {
    std::vector<int> img(img_.size());
    for (std::size_t i = 0; i < img_.size(); i++)
        img[static_cast<std::size_t>(img_[i])] = static_cast<int>(i);
    return Permutation(std::move(img));
}

bool Permutation::is_identity() const {
    for (std::size_t i = 0; i < img_.size(); i++)
        if (img_[i] != static_cast<int>(i)) return false;
    return true;
}

std::vector<int> Permutation::cycle_type() const {
    std::vector<bool> seen(img_.size(), false);
    std::vector<int> type;
    for (std::size_t i = 0; i < img_.size(); i++) {
        if (seen[i]) continue;
        int len = 0;
        std::size_t j = i;
        while (!seen[j]) {
            seen[j] = true;
            j = static_cast<std::size_t>(img_[j]);
            len++;
        }
        type.push_back(len);
    }
    std::sort(type.rbegin(), type.rend());
    return type;
}

long long group_order(const std::vector<Permutation>& gens, int max_n) {
    if (gens.empty()) return 1;
    const int n = gens[0].size();
    for (const Permutation& g : gens)
        if (g.size() != n) throw InputError("generators act on different sets");
    if (n > max_n)
        throw LimitError("group_order: n = " + std::to_string(n) +
                         " exceeds the enumeration limit n <= " + std::to_string(max_n));

    std::set<std::vector<int>> seen;
    std::deque<Permutation> queue;
    Permutation id = Permutation::identity(n);
    seen.insert(id.images());
    queue.push_back(id);
    while (!queue.empty()) {
        Permutation g = queue.front();
        queue.pop_front();
        for (const Permutation& s : gens) {
            Permutation h = g.then(s);
            if (seen.insert(h.images()).second) queue.push_back(h);
        }
    }
    return static_cast<long long>(seen.size());
}

} // namespace permucover
