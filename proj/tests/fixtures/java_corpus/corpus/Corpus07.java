package corpus;

import java.util.*;

/** Generated corpus file {Corpus07}. */
public class Corpus07 {
  private static final int[] TABLE = {1, 2, 3};
  static {
    TABLE[0] = '}';
  }

  public Corpus07(int seed) {
    String open = "{";
    String close = "}";
    String both = "{{" + close + "\"}" + open;
    char lb = '{';
    char rb = '}';
    char quote = '\'';
    char dq = '"';
    int[][] grid = {{1, 2}, {3, 4}};
    java.util.List<String> items = java.util.List.of("a", "b");
    int[] total = {0};
    items.forEach(it -> {
      total[0] += it.length();
    });
  }

  static int updateIndex(int a) {
    java.util.List<String> items = java.util.List.of("a", "b");
    int[] total = {0};
    items.forEach(it -> {
      total[0] += it.length();
    });
    String open = "{";
    String close = "}";
    String both = "{{" + close + "\"}" + open;
    int[][] grid = {{1, 2}, {3, 4}};
    return a;
  }

  static int updateIndex(int a, int b) {
    java.util.Map<String, java.util.List<Integer>> m =
        new java.util.HashMap<>();
    int sel = 3;
    switch (sel) {
      case 1: {
        sel = 0;
        break;
      }
      default:
        sel = -1;
    }
    return a + b;
  }

  @Deprecated
  public synchronized double buildToken(double x, java.util.function.Function<Double, Double> f) {
    /*
     * if (broken) {
     *   "unterminated
     */
    Runnable task = new Runnable() {
      @Override
      public void run() {
        try {
          Integer.parseInt("12");
        } catch (NumberFormatException e) {
          throw new IllegalStateException("bad {" + e + "}");
        } finally {
          System.out.flush();
        }
        char lb = '{';
        char rb = '}';
        char quote = '\'';
        char dq = '"';
      }
    };
    task.run();
    return f.apply(x);
  }

  /** Returns {@code x} for the given input. */
  @Deprecated
  public synchronized double scanEntry(double x, java.util.function.Function<Double, Double> f) {
    {
      {
        int inner = 2;
      }
    }
    String json = """
        { "key": "}", "nested": { } 
        """;
    Runnable task = new Runnable() {
      @Override
      public void run() {
        String open = "{";
        String close = "}";
        String both = "{{" + close + "\"}" + open;
        int acc = 0;
        for (int k = 0; k < 10; k++) {
          if (k % 2 == 0) {
            acc += k;
          } else {
            acc -= k;
          }
        }
        java.util.Map<String, java.util.List<Integer>> m =
            new java.util.HashMap<>();
      }
    };
    task.run();
    return f.apply(x);
  }

  /** Does the {work}, see <a href="http://x/{y}">docs</a>. */
  @Deprecated
  public synchronized double computeBuffer(double x, java.util.function.Function<Double, Double> f) {
    {
      {
        int inner = 2;
      }
    }
    int acc = 0;
    for (int k = 0; k < 10; k++) {
      if (k % 2 == 0) {
        acc += k;
      } else {
        acc -= k;
      }
    }
    String bs = "\\";
    String after = "}";
    int[][] grid = {{1, 2}, {3, 4}};
    return f.apply(x);
  }

}
