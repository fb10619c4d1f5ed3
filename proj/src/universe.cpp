#include "partq/universe.hpp"

#include "partq/errors.hpp"

#include <algorithm>
#include <utility>

namespace partq {

Universe::Universe(std::vector<std::string> labels) {
    if (labels.empty()) {
        throw InvalidArgument("universe must contain at least one atom");
    }
    auto impl = std::make_shared<Impl>();
    impl->labels = std::move(labels);
    for (int i = 0; i < static_cast<int>(impl->labels.size()); ++i) {
        const auto& name = impl->labels[i];
        if (!impl->index.emplace(name, i).second) {
            throw InvalidArgument("duplicate atom label '" + name + "'");
        }
    }
    impl_ = std::move(impl);
}

Universe Universe::letters(int n) {
    if (n < 1) {
        throw InvalidArgument("universe size must be positive");
    }
    std::vector<std::string> labels;
    labels.reserve(n);
    for (int i = 0; i < n; ++i) {
        if (n <= 26) {
            labels.emplace_back(1, static_cast<char>('a' + i));
        } else {
            labels.push_back("u" + std::to_string(i + 1));
        }
    }
    return Universe(std::move(labels));
}

int Universe::index_of(const std::string& name) const {
    auto it = impl_->index.find(name);
    if (it == impl_->index.end()) {
        throw AtomNotInUniverse("atom '" + name + "' is not in the universe");
    }
    return it->second;
}

bool Universe::contains(const std::string& name) const {
    return impl_->index.count(name) != 0;
}

AtomSet::AtomSet(Universe universe, std::vector<int> indices)
    : universe_(std::move(universe)), indices_(std::move(indices)) {
    std::sort(indices_.begin(), indices_.end());
    indices_.erase(std::unique(indices_.begin(), indices_.end()), indices_.end());
    for (int i : indices_) {
        if (i < 0 || i >= universe_.size()) {
            throw AtomNotInUniverse("atom index " + std::to_string(i) + " out of range");
        }
    }
}

AtomSet AtomSet::from_names(const Universe& universe, const std::vector<std::string>& names) {
    std::vector<int> idx;
    idx.reserve(names.size());
    for (const auto& name : names) {
        idx.push_back(universe.index_of(name));
    }
    return AtomSet(universe, std::move(idx));
}

AtomSet AtomSet::full(const Universe& universe) {
    std::vector<int> idx(universe.size());
    for (int i = 0; i < universe.size(); ++i) idx[i] = i;
    return AtomSet(universe, std::move(idx));
}

AtomSet AtomSet::empty(const Universe& universe) { return AtomSet(universe, {}); }

bool AtomSet::contains(int atom) const {
    return std::binary_search(indices_.begin(), indices_.end(), atom);
}

std::vector<std::string> AtomSet::names() const {
    std::vector<std::string> out;
    out.reserve(indices_.size());
    for (int i : indices_) out.push_back(universe_.label(i));
    return out;
}

}  // namespace partq
