#include "qrep/grid_store.hpp"

#include <regex>

namespace qrep {

GridStore::GridStore(const Catalog& catalog, std::optional<std::filesystem::path> cache_dir)
    : catalog_(catalog), cache_dir_(std::move(cache_dir))
{
}

std::filesystem::path GridStore::cache_file(const std::filesystem::path& dir, const std::string& name, std::int64_t m_max,
                                            std::int64_t n_max)
{
    return dir / (name + "_m" + std::to_string(m_max) + "_n" + std::to_string(n_max) + ".grid.json");
}

std::shared_ptr<const CoefficientGrid> GridStore::from_disk(const std::string& name, std::int64_t m_max, std::int64_t n_max) const
{
    if (!cache_dir_ || !std::filesystem::is_directory(*cache_dir_)) return nullptr;
    const std::regex pattern(name + R"(_m(\d+)_n(\d+)\.grid\.json)");
    for (const auto& f : std::filesystem::directory_iterator(*cache_dir_)) {
        std::smatch match;
        const auto file = f.path().filename().string();
        if (!std::regex_match(file, match, pattern)) continue;
        if (std::stoll(match[1]) < m_max || std::stoll(match[2]) < n_max) continue;
        auto g = std::make_shared<const CoefficientGrid>(load_grid(f.path()));
        if (g->function() == name && g->covers(m_max, n_max)) return g;
    }
    return nullptr;
}

std::shared_ptr<const CoefficientGrid> GridStore::get(const std::string& name, std::int64_t m_max, std::int64_t n_max)
{
    {
        std::lock_guard lock(mutex_);
        const auto [lo, hi] = held_.equal_range(name);
        for (auto it = lo; it != hi; ++it)
            if (it->second->covers(m_max, n_max)) return it->second;
    }
    auto g = from_disk(name, m_max, n_max);
    if (!g) {
        const auto t = catalog_.expand(name, m_max + n_max);
        g = std::make_shared<const CoefficientGrid>(build_grid(name, t, m_max, n_max));
        if (cache_dir_) save_grid(*g, cache_file(*cache_dir_, name, m_max, n_max));
    }
    std::lock_guard lock(mutex_);
    held_.emplace(name, g);
    return g;
}

} // namespace qrep
