#pragma once

#include <filesystem>
#include <string>
#include <vector>

namespace ramosa {

/// Calendar day with civil-day arithmetic, enough for ordering weather
/// series and reporting stage dates.
struct Date {
    int year = 1970;
    int month = 1;
    int day = 1;

    /// Days since 1970-01-01.
    long long serial() const;
    static Date from_serial(long long days);

    Date plus_days(int n) const { return from_serial(serial() + n); }

    std::string to_string() const; // YYYY-MM-DD
    static Date parse(const std::string& text);

    bool operator==(const Date&) const = default;
    auto operator<=>(const Date& o) const { return serial() <=> o.serial(); }
};

struct DailyWeather {
    Date date;
    double tmin = 0.0;
    double tmax = 0.0;
};

/// Cumulative growing degree days, one value per day from start_date.
struct GddSeries {
    Date start_date;
    std::vector<double> cumulative; // nondecreasing, first value >= 0

    Date date_at(std::size_t day_index) const {
        return start_date.plus_days(static_cast<int>(day_index));
    }
};

inline constexpr double kDefaultBaseTemp = 10.0;
inline const std::vector<double> kDefaultStageTargets = {324, 574, 897, 1195, 1556};

/// Thermal time for one day: max(0, (tmax+tmin)/2 - tbase). Daily values
/// below the base temperature contribute zero; tmin and tmax are not
/// individually clamped.
double daily_gdd(double tmin, double tmax, double tbase = kDefaultBaseTemp);

/// Prefix sums of daily_gdd over a sorted weather series.
GddSeries accumulate(const std::vector<DailyWeather>& weather, double tbase = kDefaultBaseTemp);

struct StageDate {
    double target = 0.0;
    bool reached = false;
    int day_index = -1; // 0-based offset from start_date when reached
    Date date;          // valid only when reached
};

/// First date whose cumulative GDD reaches each target. Targets past the end
/// of the season are reported as unreached, not errors.
std::vector<StageDate> stage_dates(const GddSeries& series, const std::vector<double>& targets);

std::vector<DailyWeather> load_weather_csv(const std::filesystem::path& path);
void save_weather_csv(const std::vector<DailyWeather>& weather, const std::filesystem::path& path);

} // namespace ramosa
