#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

namespace partq {

/// Ordered finite set of named atoms. The label order is fixed at
/// construction and defines the canonical index 0..n-1 used everywhere else.
/// Copies are cheap (shared immutable storage).
class Universe {
public:
    explicit Universe(std::vector<std::string> labels);

    /// Universe with labels "a","b","c",... (n <= 26), else "u1","u2",...
    static Universe letters(int n);

    int size() const { return static_cast<int>(impl_->labels.size()); }
    const std::string& label(int i) const { return impl_->labels.at(i); }
    const std::vector<std::string>& labels() const { return impl_->labels; }

    /// Throws AtomNotInUniverse for unknown names.
    int index_of(const std::string& name) const;
    bool contains(const std::string& name) const;

    friend bool operator==(const Universe& a, const Universe& b) {
        return a.impl_ == b.impl_ || a.impl_->labels == b.impl_->labels;
    }
    friend bool operator!=(const Universe& a, const Universe& b) { return !(a == b); }

private:
    struct Impl {
        std::vector<std::string> labels;
        std::map<std::string, int> index;
    };
    std::shared_ptr<const Impl> impl_;
};

/// A subset of a universe, kept as sorted unique atom indices.
class AtomSet {
public:
    AtomSet(Universe universe, std::vector<int> indices);
    static AtomSet from_names(const Universe& universe, const std::vector<std::string>& names);
    static AtomSet full(const Universe& universe);
    static AtomSet empty(const Universe& universe);

    const Universe& universe() const { return universe_; }
    const std::vector<int>& indices() const { return indices_; }
    int size() const { return static_cast<int>(indices_.size()); }
    bool is_empty() const { return indices_.empty(); }
    bool contains(int atom) const;
    std::vector<std::string> names() const;

private:
    Universe universe_;
    std::vector<int> indices_;
};

}  // namespace partq
