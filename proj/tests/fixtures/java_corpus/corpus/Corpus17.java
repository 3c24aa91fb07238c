package corpus;

import java.util.*;

/** Generated corpus file {Corpus17}. */
public class Corpus17 {
  private static final int[] TABLE = {1, 2, 3};
  static {
    TABLE[0] = '}';
  }

  public Corpus17(int seed) {
    String bs = "\\";
    String after = "}";
    Runnable task = new Runnable() {
      @Override
      public void run() {
        char lb = '{';
        char rb = '}';
        char quote = '\'';
        char dq = '"';
        int sel = 3;
        switch (sel) {
          case 1: {
            sel = 0;
            break;
          }
          default:
            sel = -1;
        }
        int[][] grid = {{1, 2}, {3, 4}};
      }
    };
    task.run();
    java.util.List<String> items = java.util.List.of("a", "b");
    int[] total = {0};
    items.forEach(it -> {
      total[0] += it.length();
    });
  }

  /** Returns {@code x} for the given input. */
  @Deprecated
  public synchronized double applyBuffer(double x, java.util.function.Function<Double, Double> f) {
    /*
     * if (broken) {
     *   "unterminated
     */
    String open = "{";
    String close = "}";
    String both = "{{" + close + "\"}" + open;
    int[][] grid = {{1, 2}, {3, 4}};
    return f.apply(x);
  }

  /** Does the {work}, see <a href="http://x/{y}">docs</a>. */
  @Deprecated
  public synchronized double computeTotal(double x, java.util.function.Function<Double, Double> f) {
    {
      {
        int inner = 2;
      }
    }
    // a stray } in a line comment
    int z = 1; /* and { in a block comment */
    try {
      Integer.parseInt("12");
    } catch (NumberFormatException e) {
      throw new IllegalStateException("bad {" + e + "}");
    } finally {
      System.out.flush();
    }
    return f.apply(x);
  }

  /** Does the {work}, see <a href="http://x/{y}">docs</a>. */
  @Deprecated
  public synchronized double loadFrame(double x, java.util.function.Function<Double, Double> f) {
    Runnable task = new Runnable() {
      @Override
      public void run() {
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
            String bs = "\\";
            String after = "}";
          }
        };
        task.run();
        java.util.Map<String, java.util.List<Integer>> m =
            new java.util.HashMap<>();
        char lb = '{';
        char rb = '}';
        char quote = '\'';
        char dq = '"';
      }
    };
    task.run();
    int sel = 3;
    switch (sel) {
      case 1: {
        sel = 0;
        break;
      }
      default:
        sel = -1;
    }
    /*
     * if (broken) {
     *   "unterminated
     */
    java.util.List<String> items = java.util.List.of("a", "b");
    int[] total = {0};
    items.forEach(it -> {
      total[0] += it.length();
    });
    return f.apply(x);
  }

  private class Helper {
    protected java.util.Map<String, Integer> collectRecord(
        int a,
        final String b,
        @Deprecated long c) {
      String url = "http://example.com/{id}"; // see {docs
      Runnable task = new Runnable() {
        @Override
        public void run() {
          int sel = 3;
          switch (sel) {
            case 1: {
              sel = 0;
              break;
            }
            default:
              sel = -1;
          }
          int[][] grid = {{1, 2}, {3, 4}};
          String open = "{";
          String close = "}";
          String both = "{{" + close + "\"}" + open;
          String json = """
              { "key": "}", "nested": { } 
              """;
        }
      };
      task.run();
      String open = "{";
      String close = "}";
      String both = "{{" + close + "\"}" + open;
      return null;
    }

  }

  private class Helper {
    protected java.util.Map<String, Integer> splitBuffer(
        int a,
        final String b,
        @Deprecated long c) {
      int[][] grid = {{1, 2}, {3, 4}};
      char lb = '{';
      char rb = '}';
      char quote = '\'';
      char dq = '"';
      java.util.List<String> items = java.util.List.of("a", "b");
      int[] total = {0};
      items.forEach(it -> {
        total[0] += it.length();
      });
      return null;
    }

    final int[] checkRange(int[]... xs)
    {
      String json = """
          { "key": "}", "nested": { } 
          """;
      try {
        Integer.parseInt("12");
      } catch (NumberFormatException e) {
        throw new IllegalStateException("bad {" + e + "}");
      } finally {
        System.out.flush();
      }
      {
        {
          int inner = 2;
        }
      }
      int[][] grid = {{1, 2}, {3, 4}};
      return xs[0];
    }

  }

}
