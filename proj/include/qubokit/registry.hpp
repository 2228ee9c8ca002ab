// Variable registry: bijection between model indices and structured labels
// like "x[2]", "xe[0,3,1]". Insertion order is the model's variable order.
#ifndef QUBOKIT_REGISTRY_HPP
#define QUBOKIT_REGISTRY_HPP

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

namespace qubokit {

class VariableRegistry {
public:
    std::uint32_t add(const std::string& label) {
        if (index_.count(label))
            throw std::invalid_argument("duplicate variable label: " + label);
        std::uint32_t idx = static_cast<std::uint32_t>(labels_.size());
        labels_.push_back(label);
        index_.emplace(label, idx);
        return idx;
    }

    std::size_t size() const { return labels_.size(); }

    const std::string& label(std::uint32_t index) const {
        if (index >= labels_.size())
            throw std::out_of_range("registry index out of range");
        return labels_[index];
    }

    std::optional<std::uint32_t> find(const std::string& label) const {
        auto it = index_.find(label);
        if (it == index_.end()) return std::nullopt;
        return it->second;
    }

    std::uint32_t at(const std::string& label) const {
        auto idx = find(label);
        if (!idx) throw std::out_of_range("unknown variable label: " + label);
        return *idx;
    }

    bool contains(const std::string& label) const { return index_.count(label) != 0; }

private:
    std::vector<std::string> labels_;
    std::unordered_map<std::string, std::uint32_t> index_;
};

inline std::string var_label(const char* family, int a) {
    return std::string(family) + "[" + std::to_string(a) + "]";
}
inline std::string var_label(const char* family, int a, int b) {
    return std::string(family) + "[" + std::to_string(a) + "," + std::to_string(b) + "]";
}
inline std::string var_label(const char* family, int a, int b, int c) {
    return std::string(family) + "[" + std::to_string(a) + "," + std::to_string(b) + "," +
           std::to_string(c) + "]";
}

}  // namespace qubokit

#endif
