#pragma once

#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace domset {

/// Stable counting sort by an integer key in [0, key_bound].
template <class Item, class KeyFn>
std::vector<Item> counting_sort(std::span<const Item> items, KeyFn key, int key_bound) {
    if (key_bound < 0) throw std::out_of_range("counting_sort: negative key bound");
    std::vector<std::size_t> start(static_cast<std::size_t>(key_bound) + 2, 0);
    for (const Item& item : items) {
        int k = key(item);
        if (k < 0 || k > key_bound) {
            throw std::out_of_range("counting_sort: key " + std::to_string(k) + " outside [0, " +
                                    std::to_string(key_bound) + "]");
        }
        ++start[static_cast<std::size_t>(k) + 1];
    }
    for (std::size_t i = 1; i < start.size(); ++i) start[i] += start[i - 1];
    std::vector<Item> out(items.size());
    for (const Item& item : items) out[start[static_cast<std::size_t>(key(item))]++] = item;
    return out;
}

} // namespace domset
